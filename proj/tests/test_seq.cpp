#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "trinom/seq.hpp"

#include <random>

using namespace trinom;

TEST_CASE("trinomial frozen values") {
    CHECK(trinomial_coeff(2, {1, 1}) == 3);
    CHECK(trinomial_coeff(3, {2, 1}) == 20);  // binom(6,3)
    CHECK(trinomial_coeff(4, {1, 1}) == 19);
    CHECK(trinomial_coeff_direct(0, {7, -5}) == 1);
    CHECK(trinomial_coeff_direct(5, {1, 1}) == 51);
    CHECK(trinomial_coeff_direct(3, {-1, 1}) == -7);
}

TEST_CASE("trinomial three routes agree") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 20; ++trial) {
        Int b(static_cast<long>(rng() % 101) - 50);
        Int c(static_cast<long>(rng() % 101) - 50);
        TrinomialParams tp{b, c};
        TrinomialStream ts(tp);
        for (unsigned long n = 0; n <= 200; ++n) {
            Int byrec = ts.value();
            CHECK(byrec == trinomial_coeff_direct(n, tp));
            CHECK(byrec == trinomial_coeff_third(n, tp));
            ts.step();
        }
    }
}

TEST_CASE("T_n(2,1) is the central binomial coefficient") {
    TrinomialStream ts({2, 1});
    for (unsigned long n = 0; n <= 200; ++n) {
        CHECK(ts.value() == binom(Int(2 * n), Int(n)));
        ts.step();
    }
}

TEST_CASE("sign law T_n(-b,c) = (-1)^n T_n(b,c)") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        Int b(static_cast<long>(rng() % 101) - 50);
        Int c(static_cast<long>(rng() % 101) - 50);
        for (unsigned long n = 0; n <= 60; ++n) {
            Int lhs = trinomial_coeff(n, {-b, c});
            Int rhs = trinomial_coeff(n, {b, c});
            if (n % 2 == 1) rhs = -rhs;
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("degenerate discriminant b^2 = 4c") {
    // (x^2+bx+c) = (x+b/2)^2, so T_n = binom(2n,n)(b/2)^n
    for (long half : {-3L, -1L, 1L, 2L, 5L}) {
        Int b = 2 * half, c = half * half;
        for (unsigned long n = 0; n <= 40; ++n) {
            Int expect = binom(Int(2 * n), Int(n));
            Int hp;
            mpz_pow_ui(hp.get_mpz_t(), Int(half).get_mpz_t(), n);
            CHECK(trinomial_coeff(n, {b, c}) == expect * hp);
        }
    }
}

TEST_CASE("binom") {
    CHECK(binom(4, 2) == 6);
    CHECK(binom(0, 0) == 1);
    CHECK(binom(20, 10) == 184756);
    CHECK(binom(3, 5) == 0);
    CHECK(binom(5, -1) == 0);
    CHECK(binom(-1, 3) == -1);  // generalized
    CHECK(binom_rat(Rat(-1, 2), 2) == Rat(3, 8));
}

TEST_CASE("weights") {
    CHECK(weight(BinomialFamily::CentralSq, 3) == 400);
    CHECK(weight(BinomialFamily::C3C6, 1) == 60);
    for (auto f : {BinomialFamily::Central, BinomialFamily::CentralSq, BinomialFamily::CentralCube,
                   BinomialFamily::C2C3, BinomialFamily::C2C4, BinomialFamily::C3C6}) {
        CHECK(weight(f, 0) == 1);
        WeightStream ws(f);
        for (unsigned long k = 0; k <= 50; ++k) {
            CHECK(ws.value() == weight(f, k));
            ws.step();
        }
    }
}

TEST_CASE("w_k(-1/2) matches binom(2k,k)^2 / (-16)^k") {
    for (unsigned long k = 0; k <= 30; ++k) {
        Int sign = (k % 2 == 0) ? 1 : -1;
        Int p16;
        mpz_pow_ui(p16.get_mpz_t(), Int(16).get_mpz_t(), k);
        Int b2 = binom(Int(2 * k), Int(k));
        Rat expect = Rat(sign * b2 * b2, p16);
        expect.canonicalize();
        CHECK(w_rat(Rat(-1, 2), k) == expect);
    }
}

TEST_CASE("lucas pairs") {
    CHECK(lucas_pair(3, {1, -1}) == std::pair<Int, Int>{2, 4});    // F_3, L_3
    CHECK(lucas_pair(0, {7, 3}) == std::pair<Int, Int>{0, 2});
    CHECK(lucas_pair(4, {1, 16}).first == -31);
    CHECK(lucas_pair(5, {1, 16}).first == 209);
    LucasStream ls({1, -1});
    for (unsigned long n = 0; n <= 40; ++n) {
        auto [u, v] = lucas_pair(n, {1, -1});
        CHECK(ls.u() == u);
        CHECK(ls.v() == v);
        ls.step();
    }
}

TEST_CASE("lucas closed form in the quadratic extension") {
    // (alpha-beta) u_n = alpha^n - beta^n, v_n = alpha^n + beta^n with
    // alpha,beta = (A +- sqrt(Delta))/2, checked mod a prime square ring
    Int m = Int(101) * 101;
    for (auto [A, B] : std::vector<std::pair<long, long>>{{1, -1}, {1, 16}, {8, 27}, {1, -8}}) {
        LucasParams lp{A, B};
        Int delta = lp.disc();
        ModElem inv2 = mod_inverse(ModElem(2, m));
        auto mk = [&](const Int& e0, const Int& e1) {
            return QuadExt({ModElem(e0, m) * inv2, ModElem(e1, m) * inv2, ModElem::zero(m),
                            ModElem::zero(m)},
                           delta, Int(1));
        };
        QuadExt alpha = mk(A, 1), beta = mk(A, -1);
        QuadExt apow = QuadExt::one(m, delta, 1), bpow = apow;
        LucasStream ls(lp);
        for (unsigned long n = 0; n <= 100; ++n) {
            QuadExt diff = apow - bpow;  // should be (alpha-beta) u_n = u_n * sqrt(Delta)
            CHECK(diff.coeff(0).is_zero());
            CHECK(diff.coeff(1) == ModElem(ls.u(), m));
            QuadExt sum = apow + bpow;
            CHECK(sum.coeff(0) == ModElem(ls.v(), m));
            CHECK(sum.coeff(1).is_zero());
            apow = apow * alpha;
            bpow = bpow * beta;
            ls.step();
        }
    }
}

TEST_CASE("legendre and delannoy polynomials") {
    Rat x(7, 3);
    CHECK(legendre_poly(1, x) == x);
    CHECK(legendre_poly(2, Rat(3)) == Rat(13));
    CHECK(delannoy_poly(1, Rat(1)) == Rat(3));
    CHECK(delannoy_poly(0, Rat(123, 7)) == Rat(1));
    CHECK(delannoy_poly(3, Rat(1)) == Rat(63));  // central Delannoy
    // parity: P_n(-x) = (-1)^n P_n(x)
    for (unsigned long n = 0; n <= 12; ++n) {
        Rat lhs = legendre_poly(n, Rat(-x));
        Rat rhs = legendre_poly(n, x);
        if (n % 2 == 1) rhs = -rhs;
        CHECK(lhs == rhs);
        // (-1)^n D_n(x) = D_n(-x-1)
        Rat dl = delannoy_poly(n, Rat(-x - 1));
        Rat dr = delannoy_poly(n, x);
        if (n % 2 == 1) dr = -dr;
        CHECK(dl == dr);
    }
}

TEST_CASE("legendre over modular ring matches rational route") {
    Int p = 13, m = p * p;
    for (unsigned long n : {1ul, 4ul, 6ul}) {
        for (long xv = -5; xv <= 5; ++xv) {
            ModElem got = legendre_poly(n, ModElem(xv, m));
            Rat ref = legendre_poly(n, Rat(xv));
            CHECK(got == rat_to_mod(ref, m));
        }
    }
}

TEST_CASE("trinomial_coeff_mod and mod stream") {
    CHECK(trinomial_coeff_mod(4, {1, 1}, 7).value() == 5);
    CHECK(trinomial_coeff_mod(0, {9, -2}, 11).value() == 1);
    CHECK(trinomial_coeff_mod(6, {2, 1}, 11).value() == 0);  // binom(12,6) = 924

    std::mt19937_64 rng(42);
    for (std::uint64_t pu : {3ull, 5ull, 7ull, 97ull}) {
        Int p(static_cast<unsigned long>(pu));
        for (unsigned e : {1u, 2u, 5u}) {
            Int pe;
            mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
            TrinomialParams tp{Int(static_cast<long>(rng() % 41) - 20),
                               Int(static_cast<long>(rng() % 41) - 20)};
            TrinomialModStream ms(tp, p, e, 150);
            TrinomialStream exact(tp);
            for (unsigned long n = 0; n <= 150; ++n) {
                CHECK(ms.value() == ModElem(exact.value(), pe));
                ms.step();
                exact.step();
            }
        }
    }
}

TEST_CASE("Kummer divisibility p | binom(2k,k) for (p-1)/2 < k < p") {
    for (std::uint64_t pu : primes_in(3, 199)) {
        Int p(static_cast<unsigned long>(pu));
        for (unsigned long k = (pu + 1) / 2; k < pu; ++k) {
            Int b = binom(Int(2 * k), Int(k));
            CHECK(mpz_divisible_p(b.get_mpz_t(), p.get_mpz_t()) != 0);
        }
    }
}

TEST_CASE("identity (1.8) with rational sqrt(d), incl. d = 0") {
    // exercised through the trinomial params whose discriminant is square
    for (long b = -6; b <= 6; ++b) {
        for (long e = 0; e <= 6; ++e) {
            if ((b - e) % 2 != 0) continue;
            long c4 = b * b - e * e;
            if (c4 % 4 != 0) continue;
            TrinomialParams tp{b, c4 / 4};
            // closed form: sum binom(n+k,2k)binom(2k,k)((b-e)/2)^k e^{n-k}
            for (unsigned long n = 0; n <= 25; ++n) {
                Rat rhs(0);
                Rat hd = Rat(b - e) / 2;
                hd.canonicalize();
                Rat hp(1);
                for (unsigned long k = 0; k <= n; ++k) {
                    Int ep;
                    mpz_pow_ui(ep.get_mpz_t(), Int(e).get_mpz_t(), n - k);
                    rhs += Rat(binom(Int(n + k), Int(2 * k)) * binom(Int(2 * k), Int(k))) * hp * Rat(ep);
                    hp *= hd;
                }
                rhs.canonicalize();
                CHECK(rhs == Rat(trinomial_coeff(n, tp)));
            }
        }
    }
}
