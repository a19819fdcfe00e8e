#ifndef TRINOM_IDENTITIES_HPP
#define TRINOM_IDENTITIES_HPP

// Exact verification of the polynomial and combinatorial identities over Q,
// by evaluation at enough points to pin each polynomial.

#include "trinom/exact.hpp"
#include "trinom/seq.hpp"

namespace trinom {

// sum_k binom(n+k,2k) binom(2k,k)^2 x^k == P_n(t)^2  with  x = (t^2-1)/4.
bool check_identity_1_1(unsigned long n, const Rat& t);

// sum_k binom(n,k) binom(n+k,k) binom(2k,k) (x(x+1))^k == D_n(x)^2.
bool check_identity_1_2(unsigned long n, const Rat& x);

// D_n(x) D_n(y) == sum_k binom(n+k,2k)binom(2k,k)
//                     sum_j binom(k+j,2j)binom(2j,j)(xy+y)^j (x-y)^{k-j}.
bool check_identity_1_15(unsigned long n, const Rat& x, const Rat& y);

// T_n(b,c) == sum_k binom(n+k,2k)binom(2k,k)((b-e)/2)^k e^{n-k}
// where e = sqrt(b^2-4c) must be a (rational) integer here.
bool check_identity_1_8(unsigned long n, const Int& b, const Int& c);

// sum_k binom(n,k)binom(k+m,n) w_{k+m}(h) == w_m(h) w_n(h) / binom(m+n,n).
bool check_lemma_2_1(unsigned long m, unsigned long n, const Rat& h);

// sum_j (-1)^{m-j} binom(m+j,2j)binom(2j,j)binom(j+k+m,k)binom(j,n)
//   == binom(k+m+n,m)binom(k+m,m)binom(m,n).
bool check_lemma_2_2(unsigned long k, unsigned long m, unsigned long n);

// The inner double-sum transform of (1.10)/(1.15), evaluated through the
// trinomial recursion: sum_j binom(k+j,2j)binom(2j,j) A^j B^{k-j}
// equals T_k(2A+B, A(A+B)).
Rat inner_transform(unsigned long k, const Rat& A, const Rat& B);

}  // namespace trinom

#endif
