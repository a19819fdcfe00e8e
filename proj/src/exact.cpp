#include "trinom/exact.hpp"

namespace trinom {

int jacobi(const Int& a_in, const Int& n_in) {
    if (n_in <= 0 || mpz_even_p(n_in.get_mpz_t()))
        throw std::invalid_argument("jacobi: n must be odd and positive");
    Int a = a_in, n = n_in;
    mpz_mod(a.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
    int r = 1;
    while (a != 0) {
        while (mpz_even_p(a.get_mpz_t())) {
            a >>= 1;
            unsigned long n8 = mpz_fdiv_ui(n.get_mpz_t(), 8);
            if (n8 == 3 || n8 == 5) r = -r;
        }
        std::swap(a, n);
        if (mpz_fdiv_ui(a.get_mpz_t(), 4) == 3 && mpz_fdiv_ui(n.get_mpz_t(), 4) == 3) r = -r;
        mpz_mod(a.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
    }
    return n == 1 ? r : 0;
}

int jacobi(long a, const Int& n) { return jacobi(Int(a), n); }
int jacobi(const Int& a, long n) { return jacobi(a, Int(n)); }
int jacobi(long a, long n) { return jacobi(Int(a), Int(n)); }

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, b, m);
        b = mulmod_u64(b, b, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // base set deterministic for all n < 3.3e24, covers 2^64
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

bool is_prime(const Int& n) {
    if (n < 0) throw std::invalid_argument("is_prime: negative input");
    if (!n.fits_ulong_p() && mpz_sizeinbase(n.get_mpz_t(), 2) > 64)
        throw std::domain_error("is_prime: input exceeds 64 bits");
    std::uint64_t v = 0;
    mpz_export(&v, nullptr, -1, sizeof v, 0, 0, n.get_mpz_t());
    if (n == 0) v = 0;
    return is_prime(v);
}

std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> out;
    if (lo > hi) throw std::invalid_argument("primes_in: lo > hi");
    if (lo <= 2 && hi >= 2) out.push_back(2);
    std::uint64_t p = lo <= 3 ? 3 : lo | 1;
    for (; p <= hi && p >= lo; p += 2) {
        if (is_prime(p)) out.push_back(p);
        if (p > hi - 2) break;  // overflow guard near 2^64
    }
    return out;
}

Int mod_pow(const Int& base, const Int& exp, const Int& m) {
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), m.get_mpz_t());
    return r;
}

ModElem ModElem::pow(const Int& e) const {
    return ModElem(mod_pow(v_, e, m_), m_);
}

ModElem ModElem::inv() const { return mod_inverse(*this); }

ModElem mod_inverse(const ModElem& a) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.value().get_mpz_t(), a.modulus().get_mpz_t()) == 0)
        throw std::domain_error("mod_inverse: element shares a factor with the modulus");
    return ModElem(std::move(r), a.modulus());
}

ModElem rat_to_mod(const Rat& x, const Int& m) {
    ModElem den(x.get_den(), m);
    return ModElem(x.get_num(), m) * mod_inverse(den);
}

std::optional<Int> sqrt_mod_prime_power(const Int& a_in, const Int& p, unsigned e) {
    Int pe = 1;
    for (unsigned i = 0; i < e; ++i) pe *= p;
    Int a;
    mpz_mod(a.get_mpz_t(), a_in.get_mpz_t(), pe.get_mpz_t());
    Int am = a % p;
    if (am == 0) return std::nullopt;  // only the unit case is needed here
    if (jacobi(am, p) != 1) return std::nullopt;

    // Tonelli-Shanks mod p
    Int q = p - 1;
    unsigned long s = 0;
    while (mpz_even_p(q.get_mpz_t())) { q >>= 1; ++s; }
    Int z = 2;
    while (jacobi(z, p) != -1) ++z;
    Int m(s), c = mod_pow(z, q, p), t = mod_pow(am, q, p), r = mod_pow(am, (q + 1) / 2, p);
    while (t != 1) {
        Int tt = t;
        unsigned long i = 0;
        while (tt != 1) { tt = tt * tt % p; ++i; }
        Int b = c;
        for (unsigned long j = 0; j + i + 1 < mpz_get_ui(m.get_mpz_t()); ++j) b = b * b % p;
        m = i;
        c = b * b % p;
        t = t * c % p;
        r = r * b % p;
    }

    // Hensel: r <- r - (r^2 - a) / (2r) mod p^{2^k}
    Int mod = p;
    for (unsigned k = 1; k < e; k <<= 1) {
        Int mod2 = mod * mod;
        if (mod2 > pe) mod2 = pe;
        Int inv2r;
        Int two_r = 2 * r;
        if (mpz_invert(inv2r.get_mpz_t(), two_r.get_mpz_t(), mod2.get_mpz_t()) == 0)
            return std::nullopt;
        Int diff = (r * r - a) % mod2;
        r = (r - diff * inv2r) % mod2;
        if (r < 0) r += mod2;
        mod = mod2;
        if (mod == pe) break;
    }
    if ((r * r - a) % pe != 0) throw std::logic_error("sqrt_mod_prime_power: lift failed");
    return r;
}

QuadExt QuadExt::operator+(const QuadExt& o) const {
    check(o);
    return QuadExt({c_[0] + o.c_[0], c_[1] + o.c_[1], c_[2] + o.c_[2], c_[3] + o.c_[3]}, d_, D_);
}

QuadExt QuadExt::operator-(const QuadExt& o) const {
    check(o);
    return QuadExt({c_[0] - o.c_[0], c_[1] - o.c_[1], c_[2] - o.c_[2], c_[3] - o.c_[3]}, d_, D_);
}

QuadExt QuadExt::operator*(const QuadExt& o) const {
    check(o);
    const Int& m = modulus();
    const Int &a0 = c_[0].value(), &a1 = c_[1].value(), &a2 = c_[2].value(), &a3 = c_[3].value();
    const Int &b0 = o.c_[0].value(), &b1 = o.c_[1].value(), &b2 = o.c_[2].value(), &b3 = o.c_[3].value();
    // s^2 = d, t^2 = D, (st)^2 = dD
    Int r0 = a0 * b0 + d_ * (a1 * b1) + D_ * (a2 * b2) + d_ * D_ % m * (a3 * b3);
    Int r1 = a0 * b1 + a1 * b0 + D_ * (a2 * b3 + a3 * b2);
    Int r2 = a0 * b2 + a2 * b0 + d_ * (a1 * b3 + a3 * b1);
    Int r3 = a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1;
    return QuadExt({ModElem(std::move(r0), m), ModElem(std::move(r1), m),
                    ModElem(std::move(r2), m), ModElem(std::move(r3), m)},
                   d_, D_);
}

QuadExt QuadExt::scale(const ModElem& k) const {
    return QuadExt({c_[0] * k, c_[1] * k, c_[2] * k, c_[3] * k}, d_, D_);
}

}  // namespace trinom
