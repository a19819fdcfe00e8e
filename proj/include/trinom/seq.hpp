#ifndef TRINOM_SEQ_HPP
#define TRINOM_SEQ_HPP

// Coefficient families and polynomial sequences: generalized central
// trinomial coefficients T_n(b,c), binomial weight products, Lucas pairs,
// Legendre and Delannoy polynomials over any ring from exact.hpp.

#include "trinom/exact.hpp"

#include <utility>

namespace trinom {

struct TrinomialParams {
    Int b, c;
    Int disc() const { return b * b - 4 * c; }
};

struct LucasParams {
    Int A, B;
    Int disc() const { return A * A - 4 * B; }
};

enum class BinomialFamily {
    Central,      // binom(2k,k)
    CentralSq,    // binom(2k,k)^2
    CentralCube,  // binom(2k,k)^3
    C2C3,         // binom(2k,k) binom(3k,k)
    C2C4,         // binom(4k,2k) binom(2k,k)
    C3C6,         // binom(6k,3k) binom(3k,k)
};

// binom(n,k): 0 for k < 0 or (n >= 0 and k > n); generalized falling
// factorial definition for negative n.
Int binom(const Int& n, const Int& k);
Int binom(long n, long k);

// binom(h,k) = h(h-1)...(h-k+1)/k! for rational h.
Rat binom_rat(const Rat& h, unsigned long k);

// w_k(h) = binom(h,k) * binom(h+k,k).
Rat w_rat(const Rat& h, unsigned long k);

Int weight(BinomialFamily f, unsigned long k);

// T_n(b,c) by the three-term recursion (exact integer division each step).
Int trinomial_coeff(unsigned long n, const TrinomialParams& tp);

// T_n(b,c) by the explicit double sum of the defining expansion; the
// independent oracle for the recursion.
Int trinomial_coeff_direct(unsigned long n, const TrinomialParams& tp);

// Third closed form, sum over binom(n,k)binom(n-k,k).
Int trinomial_coeff_third(unsigned long n, const TrinomialParams& tp);

// T_n(b,c) mod m via the factorial-scaled recursion (no modular division by
// n+1 ever happens).
ModElem trinomial_coeff_mod(unsigned long n, const TrinomialParams& tp, const Int& m);

// (u_n, v_n) with u_{n+1} = A u_n - B u_{n-1}, seeds (0,1) and (2,A).
std::pair<Int, Int> lucas_pair(unsigned long n, const LucasParams& lp);

// P_n(x) = sum_k binom(n,k)binom(n+k,k)((x-1)/2)^k, generic over rings where
// 2 is invertible.
template <class R>
R legendre_poly(unsigned long n, const R& x) {
    R y = ring_halve(x - ring_embed(x, 1));
    R acc = ring_embed(x, 0);
    R ypow = ring_embed(x, 1);
    Int coeff = 1;  // binom(n,k) * binom(n+k,k)
    for (unsigned long k = 0; k <= n; ++k) {
        acc = acc + ypow * ring_embed(x, coeff);
        if (k < n) {
            // binom(n,k+1)/binom(n,k) = (n-k)/(k+1);  binom(n+k+1,k+1)/binom(n+k,k) = (n+k+1)/(k+1)
            coeff *= Int(n - k) * Int(n + k + 1);
            Int den = Int(k + 1) * Int(k + 1);
            mpz_divexact(coeff.get_mpz_t(), coeff.get_mpz_t(), den.get_mpz_t());
            ypow = ypow * y;
        }
    }
    return acc;
}

// D_n(x) = sum_k binom(n,k)binom(n+k,k) x^k.
template <class R>
R delannoy_poly(unsigned long n, const R& x) {
    R acc = ring_embed(x, 0);
    R xpow = ring_embed(x, 1);
    Int coeff = 1;
    for (unsigned long k = 0; k <= n; ++k) {
        acc = acc + xpow * ring_embed(x, coeff);
        if (k < n) {
            coeff *= Int(n - k) * Int(n + k + 1);
            Int den = Int(k + 1) * Int(k + 1);
            mpz_divexact(coeff.get_mpz_t(), coeff.get_mpz_t(), den.get_mpz_t());
            xpow = xpow * x;
        }
    }
    return acc;
}

// --- incremental streams used by the congruence and series engines --------

// Exact T_0, T_1, T_2, ... for integer (b,c).
class TrinomialStream {
public:
    explicit TrinomialStream(TrinomialParams tp);
    const Int& value() const { return cur_; }   // T_n
    unsigned long index() const { return n_; }
    void step();                                 // n -> n+1
private:
    TrinomialParams tp_;
    Int d_, prev_, cur_;
    unsigned long n_ = 0;
};

// Exact T-stream for rational parameters (duality checks take p-adic b,c).
class TrinomialRatStream {
public:
    TrinomialRatStream(Rat b, Rat c);
    const Rat& value() const { return cur_; }
    void step();
private:
    Rat b_, d_, prev_, cur_;
    unsigned long n_ = 0;
};

// T_n(b,c) mod p^e streamed without modular division: carries
// scaled_n = n! T_n modulo p^{e + v_p(maxn!)} and strips the factorial's
// p-part exactly.
class TrinomialModStream {
public:
    TrinomialModStream(TrinomialParams tp, const Int& p, unsigned e, unsigned long max_n);
    ModElem value() const;  // T_n mod p^e
    void step();
private:
    TrinomialParams tp_;
    Int d_;
    Int p_, pe_, big_;           // p^e and the carry modulus p^{e+v}
    Int scaled_prev_, scaled_cur_;  // (n-1)! T_{n-1}, n! T_n mod big_
    Int unit_fact_;              // n! / p^{v_p(n!)} mod p^e
    unsigned long vp_ = 0;       // v_p(n!)
    unsigned long n_ = 0;
};

// Exact Lucas pair stream.
class LucasStream {
public:
    explicit LucasStream(LucasParams lp);
    const Int& u() const { return u_; }
    const Int& v() const { return v_; }
    void step();
private:
    LucasParams lp_;
    Int u_, v_, up_, vp_;
    unsigned long n_ = 0;
};

// Exact weight(f, k) for k = 0, 1, 2, ... by incremental binomial updates.
class WeightStream {
public:
    explicit WeightStream(BinomialFamily f);
    const Int& value() const { return w_; }
    void step();
private:
    BinomialFamily f_;
    Int b2_ = 1, b3_ = 1, b4_ = 1, b6_ = 1;  // binom(2k,k), binom(3k,k), binom(4k,2k), binom(6k,3k)
    Int w_ = 1;
    unsigned long k_ = 0;
    void rebuild();
};

}  // namespace trinom

#endif
