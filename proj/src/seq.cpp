#include "trinom/seq.hpp"

namespace trinom {

Int binom(const Int& n, const Int& k) {
    if (k < 0) return 0;
    if (n >= 0 && k > n) return 0;
    if (!k.fits_ulong_p()) throw std::invalid_argument("binom: k too large");
    Int r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k.get_ui());
    return r;
}

Int binom(long n, long k) { return binom(Int(n), Int(k)); }

Rat binom_rat(const Rat& h, unsigned long k) {
    Rat r(1);
    Rat f(h);
    for (unsigned long i = 0; i < k; ++i) {
        r *= (h - Rat(static_cast<long>(i))) / Rat(static_cast<long>(i + 1));
    }
    r.canonicalize();
    return r;
}

Rat w_rat(const Rat& h, unsigned long k) {
    Rat r = binom_rat(h, k) * binom_rat(h + Rat(static_cast<long>(k)), k);
    r.canonicalize();
    return r;
}

Int weight(BinomialFamily f, unsigned long k) {
    Int b2 = binom(Int(2 * k), Int(k));
    switch (f) {
        case BinomialFamily::Central: return b2;
        case BinomialFamily::CentralSq: return b2 * b2;
        case BinomialFamily::CentralCube: return b2 * b2 * b2;
        case BinomialFamily::C2C3: return b2 * binom(Int(3 * k), Int(k));
        case BinomialFamily::C2C4: return binom(Int(4 * k), Int(2 * k)) * b2;
        case BinomialFamily::C3C6: return binom(Int(6 * k), Int(3 * k)) * binom(Int(3 * k), Int(k));
    }
    throw std::logic_error("weight: bad family");
}

Int trinomial_coeff(unsigned long n, const TrinomialParams& tp) {
    if (n == 0) return 1;
    Int d = tp.disc();
    Int prev = 1, cur = tp.b;
    for (unsigned long m = 1; m < n; ++m) {
        Int next = Int(2 * m + 1) * tp.b * cur - Int(m) * d * prev;
        Int div(m + 1);
        if (!mpz_divisible_p(next.get_mpz_t(), div.get_mpz_t()))
            throw std::logic_error("trinomial_coeff: recursion not divisible by n+1");
        mpz_divexact(next.get_mpz_t(), next.get_mpz_t(), div.get_mpz_t());
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Int trinomial_coeff_direct(unsigned long n, const TrinomialParams& tp) {
    Int acc = 0;
    for (unsigned long k = 0; 2 * k <= n; ++k) {
        Int term = binom(Int(n), Int(2 * k)) * binom(Int(2 * k), Int(k));
        Int bp, cp;
        mpz_pow_ui(bp.get_mpz_t(), tp.b.get_mpz_t(), n - 2 * k);
        mpz_pow_ui(cp.get_mpz_t(), tp.c.get_mpz_t(), k);
        acc += term * bp * cp;
    }
    return acc;
}

Int trinomial_coeff_third(unsigned long n, const TrinomialParams& tp) {
    Int acc = 0;
    for (unsigned long k = 0; 2 * k <= n; ++k) {
        Int term = binom(Int(n), Int(k)) * binom(Int(n - k), Int(k));
        Int bp, cp;
        mpz_pow_ui(bp.get_mpz_t(), tp.b.get_mpz_t(), n - 2 * k);
        mpz_pow_ui(cp.get_mpz_t(), tp.c.get_mpz_t(), k);
        acc += term * bp * cp;
    }
    return acc;
}

ModElem trinomial_coeff_mod(unsigned long n, const TrinomialParams& tp, const Int& m) {
    // direct reduction of the exact recursion; the streaming class below is
    // the scan-speed path and is tested against this
    Int t = trinomial_coeff(n, tp);
    return ModElem(t, m);
}

std::pair<Int, Int> lucas_pair(unsigned long n, const LucasParams& lp) {
    Int u0 = 0, u1 = 1, v0 = 2, v1 = lp.A;
    if (n == 0) return {u0, v0};
    for (unsigned long i = 1; i < n; ++i) {
        Int u2 = lp.A * u1 - lp.B * u0;
        Int v2 = lp.A * v1 - lp.B * v0;
        u0 = std::move(u1); u1 = std::move(u2);
        v0 = std::move(v1); v1 = std::move(v2);
    }
    return {u1, v1};
}

TrinomialStream::TrinomialStream(TrinomialParams tp)
    : tp_(std::move(tp)), d_(tp_.disc()), prev_(1), cur_(1) {}

void TrinomialStream::step() {
    if (n_ == 0) {
        prev_ = 1;
        cur_ = tp_.b;
        n_ = 1;
        return;
    }
    Int next = Int(2 * n_ + 1) * tp_.b * cur_ - Int(n_) * d_ * prev_;
    Int div(n_ + 1);
    mpz_divexact(next.get_mpz_t(), next.get_mpz_t(), div.get_mpz_t());
    prev_ = std::move(cur_);
    cur_ = std::move(next);
    ++n_;
}

TrinomialRatStream::TrinomialRatStream(Rat b, Rat c)
    : b_(std::move(b)), d_(b_ * b_ - 4 * std::move(c)), prev_(1), cur_(1) {
    d_.canonicalize();
}

void TrinomialRatStream::step() {
    if (n_ == 0) {
        prev_ = 1;
        cur_ = b_;
        n_ = 1;
        return;
    }
    Rat next = Rat(static_cast<long>(2 * n_ + 1)) * b_ * cur_ - Rat(static_cast<long>(n_)) * d_ * prev_;
    next /= Rat(static_cast<long>(n_ + 1));
    next.canonicalize();
    prev_ = std::move(cur_);
    cur_ = std::move(next);
    ++n_;
}

namespace {
unsigned long vp_factorial(unsigned long n, const Int& p) {
    // v_p(n!) = sum floor(n/p^i)
    unsigned long v = 0;
    Int q = p;
    while (q <= n) {
        v += n / mpz_get_ui(q.get_mpz_t());
        if (!q.fits_ulong_p()) break;
        q *= p;
    }
    return v;
}
}  // namespace

TrinomialModStream::TrinomialModStream(TrinomialParams tp, const Int& p, unsigned e,
                                       unsigned long max_n)
    : tp_(std::move(tp)), d_(tp_.disc()), p_(p) {
    mpz_pow_ui(pe_.get_mpz_t(), p.get_mpz_t(), e);
    unsigned long vmax = vp_factorial(max_n + 1, p);
    mpz_pow_ui(big_.get_mpz_t(), p.get_mpz_t(), e + vmax);
    scaled_prev_ = 0;           // unused until n >= 1
    scaled_cur_ = 1;            // 0! T_0
    unit_fact_ = 1;
}

ModElem TrinomialModStream::value() const {
    // T_n = scaled_cur_ / n!; strip p^{vp_} then invert the unit part
    Int t = scaled_cur_;
    if (vp_ > 0) {
        Int pv;
        mpz_pow_ui(pv.get_mpz_t(), p_.get_mpz_t(), vp_);
        Int mod_window = pe_ * pv;
        mpz_mod(t.get_mpz_t(), t.get_mpz_t(), mod_window.get_mpz_t());
        if (!mpz_divisible_p(t.get_mpz_t(), pv.get_mpz_t()))
            throw std::logic_error("TrinomialModStream: scaled value not divisible by p^v");
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), pv.get_mpz_t());
    }
    return ModElem(t, pe_) * mod_inverse(ModElem(unit_fact_, pe_));
}

void TrinomialModStream::step() {
    // (n+1)! T_{n+1} = (2n+1) b * n!T_n - n^2 (b^2-4c) * (n-1)!T_{n-1}
    Int next;
    if (n_ == 0) {
        next = tp_.b;  // 1! T_1
    } else {
        next = Int(2 * n_ + 1) * tp_.b % big_ * scaled_cur_ - Int(n_) * Int(n_) * d_ % big_ * scaled_prev_;
        mpz_mod(next.get_mpz_t(), next.get_mpz_t(), big_.get_mpz_t());
    }
    scaled_prev_ = std::move(scaled_cur_);
    scaled_cur_ = std::move(next);
    ++n_;
    // fold n into the factorial bookkeeping
    Int f(n_);
    while (mpz_divisible_p(f.get_mpz_t(), p_.get_mpz_t())) {
        mpz_divexact(f.get_mpz_t(), f.get_mpz_t(), p_.get_mpz_t());
        ++vp_;
    }
    unit_fact_ = unit_fact_ * f % pe_;
}

LucasStream::LucasStream(LucasParams lp) : lp_(std::move(lp)), u_(0), v_(2), up_(0), vp_(0) {}

void LucasStream::step() {
    if (n_ == 0) {
        up_ = std::move(u_); vp_ = std::move(v_);
        u_ = 1; v_ = lp_.A;
        n_ = 1;
        return;
    }
    Int u2 = lp_.A * u_ - lp_.B * up_;
    Int v2 = lp_.A * v_ - lp_.B * vp_;
    up_ = std::move(u_); u_ = std::move(u2);
    vp_ = std::move(v_); v_ = std::move(v2);
    ++n_;
}

WeightStream::WeightStream(BinomialFamily f) : f_(f) { rebuild(); }

void WeightStream::rebuild() {
    switch (f_) {
        case BinomialFamily::Central: w_ = b2_; break;
        case BinomialFamily::CentralSq: w_ = b2_ * b2_; break;
        case BinomialFamily::CentralCube: w_ = b2_ * b2_ * b2_; break;
        case BinomialFamily::C2C3: w_ = b2_ * b3_; break;
        case BinomialFamily::C2C4: w_ = b4_ * b2_; break;
        case BinomialFamily::C3C6: w_ = b6_ * b3_; break;
    }
}

void WeightStream::step() {
    unsigned long k = k_;
    {  // binom(2k,k) -> binom(2k+2,k+1) = *2(2k+1)/(k+1)
        b2_ *= 2 * Int(2 * k + 1);
        Int den(k + 1);
        mpz_divexact(b2_.get_mpz_t(), b2_.get_mpz_t(), den.get_mpz_t());
    }
    if (f_ == BinomialFamily::C2C3 || f_ == BinomialFamily::C3C6) {
        // binom(3k,k): *3(3k+1)(3k+2) / (2(k+1)(2k+1))
        b3_ *= 3 * Int(3 * k + 1) * Int(3 * k + 2);
        Int den = 2 * Int(k + 1) * Int(2 * k + 1);
        mpz_divexact(b3_.get_mpz_t(), b3_.get_mpz_t(), den.get_mpz_t());
    }
    if (f_ == BinomialFamily::C2C4) {
        // binom(4k,2k): *4(4k+1)(4k+3) / ((2k+1)(2k+2))
        b4_ *= 4 * Int(4 * k + 1) * Int(4 * k + 3);
        Int den = Int(2 * k + 1) * Int(2 * k + 2);
        mpz_divexact(b4_.get_mpz_t(), b4_.get_mpz_t(), den.get_mpz_t());
    }
    if (f_ == BinomialFamily::C3C6) {
        // binom(6k,3k): *8(6k+1)(6k+3)(6k+5) / ((3k+1)(3k+2)(3k+3))
        b6_ *= 8 * Int(6 * k + 1) * Int(6 * k + 3) * Int(6 * k + 5);
        Int den = Int(3 * k + 1) * Int(3 * k + 2) * Int(3 * k + 3);
        mpz_divexact(b6_.get_mpz_t(), b6_.get_mpz_t(), den.get_mpz_t());
    }
    ++k_;
    rebuild();
}

}  // namespace trinom
