#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "trinom/identities.hpp"

using namespace trinom;

TEST_CASE("identity (1.1) spot values") {
    CHECK(check_identity_1_1(0, Rat(5, 2)));
    // n=1, t=3: LHS = 1 + 4*2 = 9 = P_1(3)^2
    CHECK(check_identity_1_1(1, Rat(3)));
    CHECK(check_identity_1_1(2, Rat(1)));  // x = 0
}

TEST_CASE("identity (1.1) grid certifies polynomial equality") {
    for (unsigned long n = 0; n <= 16; ++n) {
        // both sides are polynomials of degree 2n in t: 2n+1 points suffice
        for (unsigned long i = 0; i <= 2 * n; ++i) {
            Rat t(static_cast<long>(i) - static_cast<long>(n), 2);
            t.canonicalize();
            CHECK(check_identity_1_1(n, t));
        }
    }
}

TEST_CASE("identity (1.2)") {
    CHECK(check_identity_1_2(1, Rat(1)));
    CHECK(check_identity_1_2(7, Rat(0)));
    CHECK(check_identity_1_2(6, Rat(-1)));
    for (unsigned long n = 0; n <= 16; ++n)
        for (long i = 0; i <= static_cast<long>(2 * n); ++i)
            CHECK(check_identity_1_2(n, Rat(i - static_cast<long>(n), 3)));
}

TEST_CASE("identity (1.15)") {
    // a_1 = (2x+1)(2y+1), a_2 = (6x^2+6x+1)(6y^2+6y+1): n=2, x=1, y=2 -> 13*25
    Rat x(1), y(2);
    Rat a2 = Rat(6 + 6 + 1) * Rat(24 + 12 + 1);
    CHECK(a2 == Rat(13 * 37));
    CHECK(check_identity_1_15(1, x, y));
    CHECK(check_identity_1_15(2, x, y));
    // specialization x = y reduces to (1.2)'s square
    CHECK(check_identity_1_15(5, Rat(3, 2), Rat(3, 2)));
    for (unsigned long n = 0; n <= 10; ++n)
        for (long i = -2; i <= 2; ++i)
            for (long j = -2; j <= 2; ++j)
                CHECK(check_identity_1_15(n, Rat(2 * i + 1, 2), Rat(j)));
}

TEST_CASE("inner transform equals direct double sum") {
    for (unsigned long k = 0; k <= 12; ++k) {
        for (auto [an, bn] : std::vector<std::pair<long, long>>{{1, 2}, {-3, 5}, {2, 0}, {0, 7}}) {
            Rat A(an, 3), B(bn, 2);
            A.canonicalize();
            B.canonicalize();
            Rat direct(0);
            for (unsigned long j = 0; j <= k; ++j) {
                Rat t = Rat(binom(Int(k + j), Int(2 * j)) * binom(Int(2 * j), Int(j)));
                for (unsigned long i = 0; i < j; ++i) t *= A;
                for (unsigned long i = 0; i < k - j; ++i) t *= B;
                direct += t;
            }
            direct.canonicalize();
            CHECK(inner_transform(k, A, B) == direct);
        }
    }
}

TEST_CASE("lemma 2.1") {
    CHECK(check_lemma_2_1(0, 0, Rat(1, 3)));
    CHECK(check_lemma_2_1(1, 1, Rat(-1, 2)));
    CHECK(check_lemma_2_1(2, 3, Rat(5)));
    for (unsigned long m = 0; m <= 6; ++m)
        for (unsigned long n = 0; n <= 6; ++n)
            for (auto h : {Rat(-1, 2), Rat(-1, 4), Rat(-1, 3), Rat(-1, 6), Rat(7, 5)})
                CHECK(check_lemma_2_1(m, n, h));
}

TEST_CASE("lemma 2.2") {
    CHECK(check_lemma_2_2(0, 0, 0));
    CHECK(check_lemma_2_2(1, 2, 1));
    // m < n: both sides vanish
    CHECK(check_lemma_2_2(3, 1, 4));
    for (unsigned long k = 0; k <= 5; ++k)
        for (unsigned long m = 0; m <= 5; ++m)
            for (unsigned long n = 0; n <= 5; ++n)
                CHECK(check_lemma_2_2(k, m, n));
}

TEST_CASE("identity (1.8) via module helper") {
    CHECK(check_identity_1_8(7, 5, 4));    // d = 9
    CHECK(check_identity_1_8(9, 2, 1));    // d = 0 degenerate
    CHECK(check_identity_1_8(12, -6, 5));  // d = 16
    CHECK_THROWS_AS(check_identity_1_8(3, 1, 1), std::invalid_argument);
}
