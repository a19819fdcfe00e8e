#ifndef TRINOM_QUADFORM_HPP
#define TRINOM_QUADFORM_HPP

// Representations t*p = a*x^2 + b*y^2 of (multiples of) primes by binary
// quadratic forms, with the sign conventions the congruence catalog uses.

#include "trinom/exact.hpp"

#include <optional>
#include <string>

namespace trinom {

struct FormSpec {
    Int a = 1, b = 1;  // a x^2 + b y^2
    int t = 1;         // represent t*p, t in {1, 2, 4}
};

enum class SignConvention {
    None,
    XMod4,   // flip sign of x until x == 1 (mod 4)
    YMod4,
    XMod3,
    YMod3,
    XOddMod4,  // d=1 only: put the odd coordinate in x, then x == 1 (mod 4)
};

struct QuadFormRep {
    Int x, y;
    bool normalized = false;
    SignConvention convention = SignConvention::None;
};

// First solution with x, y >= 0 scanning y upward (for the symmetric form
// x^2 + y^2 this yields x >= y >= 0, the lexicographic pick). nullopt when
// t*p is not represented. Rejects composite p.
std::optional<QuadFormRep> represent(const Int& p, const FormSpec& form);

// Sign-flip x and/or y to meet the convention. Throws std::domain_error when
// no sign choice can satisfy it (a convention violation worth surfacing).
QuadFormRep normalize(QuadFormRep rep, SignConvention conv, const Int& p);

// Fast x^2 + d y^2 = p solver (p odd prime, p not dividing d); agrees with
// the bounded search of represent().
std::optional<std::pair<Int, Int>> cornacchia(const Int& p, const Int& d);

SignConvention sign_convention_from_string(const std::string& s);

}  // namespace trinom

#endif
