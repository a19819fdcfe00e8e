#include "trinom/quadform.hpp"

namespace trinom {

namespace {

bool perfect_square(const Int& n, Int& root) {
    if (n < 0) return false;
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return false;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    return true;
}

}  // namespace

std::optional<QuadFormRep> represent(const Int& p, const FormSpec& form) {
    if (!is_prime(p)) throw std::invalid_argument("represent: p must be prime");
    Int target = Int(form.t) * p;
    Int root;
    for (Int y = 0; form.b * y * y <= target; ++y) {
        Int rem = target - form.b * y * y;
        if (!mpz_divisible_p(rem.get_mpz_t(), form.a.get_mpz_t())) continue;
        Int q = rem / form.a;
        if (perfect_square(q, root)) {
            return QuadFormRep{root, y};
        }
    }
    return std::nullopt;
}

QuadFormRep normalize(QuadFormRep rep, SignConvention conv, const Int& p) {
    auto flip_to = [](Int& v, unsigned long target, unsigned long mod) {
        unsigned long r = mpz_fdiv_ui(v.get_mpz_t(), mod);
        if (r == target) return true;
        Int neg = -v;
        if (mpz_fdiv_ui(neg.get_mpz_t(), mod) == target) {
            v = std::move(neg);
            return true;
        }
        return false;
    };
    bool ok = true;
    switch (conv) {
        case SignConvention::None:
            break;
        case SignConvention::XMod4:
            ok = flip_to(rep.x, 1, 4);
            break;
        case SignConvention::YMod4:
            ok = flip_to(rep.y, 1, 4);
            break;
        case SignConvention::XMod3:
            ok = flip_to(rep.x, 1, 3);
            break;
        case SignConvention::YMod3:
            ok = flip_to(rep.y, 1, 3);
            break;
        case SignConvention::XOddMod4:
            if (mpz_even_p(rep.x.get_mpz_t())) std::swap(rep.x, rep.y);
            ok = mpz_odd_p(rep.x.get_mpz_t()) && flip_to(rep.x, 1, 4);
            break;
    }
    if (!ok)
        throw std::domain_error("normalize: convention unsatisfiable at p=" + p.get_str());
    rep.normalized = true;
    rep.convention = conv;
    return rep;
}

std::optional<std::pair<Int, Int>> cornacchia(const Int& p, const Int& d) {
    if (p == 2 || !is_prime(p)) return std::nullopt;
    if (mpz_divisible_p(p.get_mpz_t(), d.get_mpz_t()) && d > 1) { /* p | d allowed to fall through */ }
    Int negd = -d;
    auto r0 = sqrt_mod_prime_power(negd, p, 1);
    if (!r0) return std::nullopt;
    Int r = *r0;
    if (2 * r < p) r = p - r;
    // descend: r_{k+1} = r_{k-1} mod r_k until r^2 < p
    Int a = p, b = r;
    while (b * b >= p) {
        Int t = a % b;
        a = std::move(b);
        b = std::move(t);
    }
    Int rem = p - b * b;
    if (!mpz_divisible_p(rem.get_mpz_t(), d.get_mpz_t())) return std::nullopt;
    Int q = rem / d, root;
    if (mpz_perfect_square_p(q.get_mpz_t()) == 0) return std::nullopt;
    mpz_sqrt(root.get_mpz_t(), q.get_mpz_t());
    Int x = b, y = root;
    if (d == 1 && x < y) std::swap(x, y);
    return std::make_pair(x, y);
}

SignConvention sign_convention_from_string(const std::string& s) {
    if (s.empty() || s == "none") return SignConvention::None;
    if (s == "x_mod4") return SignConvention::XMod4;
    if (s == "y_mod4") return SignConvention::YMod4;
    if (s == "x_mod3") return SignConvention::XMod3;
    if (s == "y_mod3") return SignConvention::YMod3;
    if (s == "x_odd_mod4") return SignConvention::XOddMod4;
    throw std::invalid_argument("unknown sign convention: " + s);
}

}  // namespace trinom
