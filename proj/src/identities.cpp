#include "trinom/identities.hpp"

namespace trinom {

namespace {
Rat rpow(const Rat& x, unsigned long k) {
    Rat r(1);
    for (unsigned long i = 0; i < k; ++i) r *= x;
    r.canonicalize();
    return r;
}
}  // namespace

bool check_identity_1_1(unsigned long n, const Rat& t) {
    Rat x = (t * t - 1) / 4;
    x.canonicalize();
    Rat lhs(0);
    for (unsigned long k = 0; k <= n; ++k) {
        Int b2 = binom(Int(2 * k), Int(k));
        lhs += Rat(binom(Int(n + k), Int(2 * k)) * b2 * b2) * rpow(x, k);
    }
    lhs.canonicalize();
    Rat pn = legendre_poly(n, t);
    Rat rhs = pn * pn;
    rhs.canonicalize();
    return lhs == rhs;
}

bool check_identity_1_2(unsigned long n, const Rat& x) {
    Rat z = x * (x + 1);
    z.canonicalize();
    Rat lhs(0);
    for (unsigned long k = 0; k <= n; ++k) {
        lhs += Rat(binom(Int(n), Int(k)) * binom(Int(n + k), Int(k)) * binom(Int(2 * k), Int(k))) *
               rpow(z, k);
    }
    lhs.canonicalize();
    Rat dn = delannoy_poly(n, x);
    Rat rhs = dn * dn;
    rhs.canonicalize();
    return lhs == rhs;
}

Rat inner_transform(unsigned long k, const Rat& A, const Rat& B) {
    // sum_j binom(k+j,2j)binom(2j,j) A^j B^{k-j} = T_k(2A+B, A(A+B))
    TrinomialRatStream ts(2 * A + B, A * (A + B));
    for (unsigned long i = 0; i < k; ++i) ts.step();
    return ts.value();
}

bool check_identity_1_15(unsigned long n, const Rat& x, const Rat& y) {
    Rat lhs = delannoy_poly(n, x) * delannoy_poly(n, y);
    lhs.canonicalize();
    Rat A = x * y + y, B = x - y;
    A.canonicalize();
    B.canonicalize();
    Rat rhs(0);
    TrinomialRatStream inner(2 * A + B, A * (A + B));
    for (unsigned long k = 0; k <= n; ++k) {
        rhs += Rat(binom(Int(n + k), Int(2 * k)) * binom(Int(2 * k), Int(k))) * inner.value();
        inner.step();
    }
    rhs.canonicalize();
    return lhs == rhs;
}

bool check_identity_1_8(unsigned long n, const Int& b, const Int& c) {
    Int d = b * b - 4 * c;
    Int e;
    if (d < 0 || mpz_perfect_square_p(d.get_mpz_t()) == 0)
        throw std::invalid_argument("check_identity_1_8: b^2-4c must be a perfect square");
    mpz_sqrt(e.get_mpz_t(), d.get_mpz_t());
    Rat half_diff = Rat(b - e) / 2;
    half_diff.canonicalize();
    Rat rhs(0);
    for (unsigned long k = 0; k <= n; ++k) {
        Rat term = Rat(binom(Int(n + k), Int(2 * k)) * binom(Int(2 * k), Int(k)));
        term *= rpow(half_diff, k);
        Int ep;
        mpz_pow_ui(ep.get_mpz_t(), e.get_mpz_t(), n - k);
        term *= Rat(ep);
        rhs += term;
    }
    rhs.canonicalize();
    return rhs == Rat(trinomial_coeff(n, {b, c}));
}

bool check_lemma_2_1(unsigned long m, unsigned long n, const Rat& h) {
    Rat lhs(0);
    for (unsigned long k = 0; k <= n; ++k) {
        lhs += Rat(binom(Int(n), Int(k)) * binom(Int(k + m), Int(n))) * w_rat(h, k + m);
    }
    lhs.canonicalize();
    Rat rhs = w_rat(h, m) * w_rat(h, n) / Rat(binom(Int(m + n), Int(n)));
    rhs.canonicalize();
    return lhs == rhs;
}

bool check_lemma_2_2(unsigned long k, unsigned long m, unsigned long n) {
    Int lhs = 0;
    for (unsigned long j = 0; j <= m; ++j) {
        Int term = binom(Int(m + j), Int(2 * j)) * binom(Int(2 * j), Int(j)) *
                   binom(Int(j + k + m), Int(k)) * binom(Int(j), Int(n));
        if ((m - j) % 2 == 1) term = -term;
        lhs += term;
    }
    Int rhs = binom(Int(k + m + n), Int(m)) * binom(Int(k + m), Int(m)) * binom(Int(m), Int(n));
    return lhs == rhs;
}

}  // namespace trinom
