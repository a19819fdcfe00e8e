#ifndef TRINOM_EXACT_HPP
#define TRINOM_EXACT_HPP

// Exact arithmetic substrate: big integers and rationals (GMP), residue
// rings Z/m for prime-power m, a two-radicand quadratic extension of Z/p^2,
// Jacobi symbol, primality, prime ranges, square roots mod p^e.

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace trinom {

using Int = mpz_class;
using Rat = mpq_class;

// Jacobi symbol (a/n) for odd n >= 1, fully multiplicative, (a/1) = 1.
// Negative a goes through the (-1/n) supplement. Throws on even or
// nonpositive n.
int jacobi(const Int& a, const Int& n);
int jacobi(long a, const Int& n);
int jacobi(const Int& a, long n);
int jacobi(long a, long n);

// Deterministic Miller-Rabin, exact for all inputs < 2^64. Larger inputs are
// rejected (the workbench never scans past 64 bits).
bool is_prime(const Int& n);
bool is_prime(std::uint64_t n);

// Ascending primes in [lo, hi].
std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi);

Int mod_pow(const Int& base, const Int& exp, const Int& m);

// An element of Z/m, stored canonically in [0, m). Operations require equal
// moduli.
class ModElem {
public:
    ModElem() : v_(0), m_(2) {}
    ModElem(Int v, Int m) : m_(std::move(m)) {
        if (m_ < 2) throw std::invalid_argument("ModElem: modulus must be >= 2");
        mpz_mod(v_.get_mpz_t(), v.get_mpz_t(), m_.get_mpz_t());
    }

    const Int& value() const { return v_; }
    const Int& modulus() const { return m_; }
    bool is_zero() const { return v_ == 0; }

    ModElem operator+(const ModElem& o) const {
        check(o);
        Int r = v_ + o.v_;
        if (r >= m_) r -= m_;
        return unchecked(std::move(r), m_);
    }
    ModElem operator-(const ModElem& o) const {
        check(o);
        Int r = v_ - o.v_;
        if (r < 0) r += m_;
        return unchecked(std::move(r), m_);
    }
    ModElem operator*(const ModElem& o) const {
        check(o);
        Int r = v_ * o.v_;
        mpz_mod(r.get_mpz_t(), r.get_mpz_t(), m_.get_mpz_t());
        return unchecked(std::move(r), m_);
    }
    ModElem operator-() const {
        return unchecked(v_ == 0 ? Int(0) : Int(m_ - v_), m_);
    }
    ModElem& operator+=(const ModElem& o) { *this = *this + o; return *this; }
    ModElem& operator-=(const ModElem& o) { *this = *this - o; return *this; }
    ModElem& operator*=(const ModElem& o) { *this = *this * o; return *this; }

    bool operator==(const ModElem& o) const { return m_ == o.m_ && v_ == o.v_; }
    bool operator!=(const ModElem& o) const { return !(*this == o); }

    ModElem scale(const Int& k) const {
        Int r = v_ * k;
        mpz_mod(r.get_mpz_t(), r.get_mpz_t(), m_.get_mpz_t());
        return unchecked(std::move(r), m_);
    }
    ModElem pow(const Int& e) const;
    ModElem inv() const;

    static ModElem zero(const Int& m) { return unchecked(Int(0), m); }
    static ModElem one(const Int& m) { return unchecked(m == 1 ? Int(0) : Int(1), m); }

private:
    static ModElem unchecked(Int v, Int m) {
        ModElem e;
        e.v_ = std::move(v);
        e.m_ = std::move(m);
        return e;
    }
    void check(const ModElem& o) const {
        if (m_ != o.m_) throw std::invalid_argument("ModElem: modulus mismatch");
    }
    Int v_, m_;
};

// b with a*b == 1 (mod m); throws std::domain_error when gcd(a, m) != 1.
ModElem mod_inverse(const ModElem& a);

// x.num * x.den^{-1} mod m; throws std::domain_error when the denominator
// shares a factor with m.
ModElem rat_to_mod(const Rat& x, const Int& m);

// Square root of a mod p^e (p odd prime, p not dividing a), via
// Tonelli-Shanks lifted by Hensel. nullopt when a is a non-residue.
std::optional<Int> sqrt_mod_prime_power(const Int& a, const Int& p, unsigned e);

// Element e0 + e1*s + e2*t + e3*s*t of Z/m[s,t]/(s^2-d, t^2-D).
// All four coefficients share the modulus; d, D are fixed per element and
// must agree between operands.
class QuadExt {
public:
    QuadExt(std::array<ModElem, 4> c, Int d, Int D)
        : c_(std::move(c)), d_(std::move(d)), D_(std::move(D)) {
        mpz_mod(d_.get_mpz_t(), d_.get_mpz_t(), modulus().get_mpz_t());
        mpz_mod(D_.get_mpz_t(), D_.get_mpz_t(), modulus().get_mpz_t());
    }

    static QuadExt from_scalar(ModElem e0, const Int& d, const Int& D) {
        Int m = e0.modulus();
        return QuadExt({std::move(e0), ModElem::zero(m), ModElem::zero(m), ModElem::zero(m)}, d, D);
    }
    static QuadExt one(const Int& m, const Int& d, const Int& D) {
        return from_scalar(ModElem::one(m), d, D);
    }

    const ModElem& coeff(int i) const { return c_[static_cast<std::size_t>(i)]; }
    const Int& modulus() const { return c_[0].modulus(); }
    const Int& d() const { return d_; }
    const Int& D() const { return D_; }

    // radical-free and equal to the given residue in the scalar slot
    bool is_scalar() const { return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero(); }

    QuadExt operator+(const QuadExt& o) const;
    QuadExt operator-(const QuadExt& o) const;
    QuadExt operator*(const QuadExt& o) const;
    QuadExt scale(const ModElem& k) const;
    bool operator==(const QuadExt& o) const { return c_ == o.c_ && d_ == o.d_ && D_ == o.D_; }

private:
    void check(const QuadExt& o) const {
        if (d_ != o.d_ || D_ != o.D_ || modulus() != o.modulus())
            throw std::invalid_argument("QuadExt: ring mismatch");
    }
    std::array<ModElem, 4> c_;
    Int d_, D_;
};

// --- generic ring hooks used by the sequence evaluators -------------------

inline Int ring_embed(const Int&, const Int& z) { return z; }
inline Rat ring_embed(const Rat&, const Int& z) { return Rat(z); }
inline ModElem ring_embed(const ModElem& like, const Int& z) { return ModElem(z, like.modulus()); }
inline QuadExt ring_embed(const QuadExt& like, const Int& z) {
    return QuadExt::from_scalar(ModElem(z, like.modulus()), like.d(), like.D());
}

// x/2, defined whenever 2 is invertible (or, over Z, x is even).
inline Int ring_halve(const Int& x) {
    if (mpz_odd_p(x.get_mpz_t())) throw std::domain_error("ring_halve: odd integer");
    return x / 2;
}
inline Rat ring_halve(const Rat& x) { return x / 2; }
inline ModElem ring_halve(const ModElem& x) {
    return x * mod_inverse(ModElem(2, x.modulus()));
}
inline QuadExt ring_halve(const QuadExt& x) {
    return x.scale(mod_inverse(ModElem(2, x.modulus())));
}

}  // namespace trinom

#endif
