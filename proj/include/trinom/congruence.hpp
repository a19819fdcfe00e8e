#ifndef TRINOM_CONGRUENCE_HPP
#define TRINOM_CONGRUENCE_HPP

// The mod-p^e sum engine and the declarative catalog of congruence cases:
// each case carries guards over Jacobi symbols and residue classes of p, an
// optional binary-quadratic-form representation, and an expected-value
// expression evaluated mod p^e.

#include "trinom/exact.hpp"
#include "trinom/quadform.hpp"
#include "trinom/seq.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace trinom {

// ---------------------------------------------------------------- sums ----

struct SumSpec {
    BinomialFamily family = BinomialFamily::CentralSq;
    Rat m = 1;  // term k carries 1/m^k
    std::optional<TrinomialParams> tri;
    int tri_index = 1;  // T_{index*k}
    int tri_power = 1;  // squared trinomial terms appear in a few conjectures
    std::optional<LucasParams> lucas;
    char lucas_comp = 'u';
    std::optional<std::pair<Int, Int>> linear;  // (a0, a1): multiply by a0 + a1*k
};

// sum_{k=0}^{p^a - 1} of the spec's terms, reduced mod p^mod_exp.
// Throws std::domain_error when m is not invertible.
ModElem eval_sum_mod(const SumSpec& s, const Int& p, unsigned a, unsigned mod_exp);

// Bernoulli number by the defining recurrence (memoized, thread-safe).
Rat bernoulli(unsigned long n);

// ---------------------------------------------------- expected values -----

struct EvalCtx {
    Int p;
    Int modulus;  // p^e
    std::optional<Int> x, y;
    int root_sym = 1;  // the (-sqrt(r)/p) symbol for legendre_surd cases
};

class Expr {
public:
    virtual ~Expr() = default;
    virtual ModElem eval_mod(const EvalCtx&) const = 0;
    virtual Rat eval_rat(const EvalCtx&) const = 0;
};

using ExprPtr = std::shared_ptr<const Expr>;

// Parses +, -, *, /, ^, integer literals, p, x, y, rs (root symbol),
// f2 (2^{p-1} mod p^e), jac(a,b), bern(k).
ExprPtr parse_expr(const std::string& src);

// Conjunction of guard atoms: jac(a,p)/jac(p,a) == +-1, p%m==r1|r2|...,
// cubic(2), true, else.
class Guard {
public:
    bool matches(const Int& p) const;
    bool is_else() const { return is_else_; }
    static Guard parse(const std::string& src);

private:
    struct JacAtom {
        bool p_on_top;  // jac(p, n) vs jac(a, p)
        Int arg;
        int want;
    };
    struct ModAtom {
        unsigned long mod;
        std::vector<unsigned long> residues;
    };
    std::vector<JacAtom> jac_atoms_;
    std::vector<ModAtom> mod_atoms_;
    bool cubic2_ = false;
    bool is_else_ = false;
};

// ------------------------------------------------------------- catalog ----

enum class CaseStatus { Proved, Conjecture, Variant };
enum class CaseKind { Sum, Relation, RelationGrid, Theorem, SurdGeo, LegendreSurd, Value };

struct Branch {
    Guard guard;
    std::optional<FormSpec> form;
    SignConvention norm = SignConvention::None;
    ExprPtr expected;
    unsigned mod_exp = 2;
    bool up_to_sign = false;
    // surd_geo: "scalar" compares the plain value, "radical2" compares the
    // coefficient of the second radical
    std::string component = "scalar";
};

struct SurdGeoSpec {
    BinomialFamily family = BinomialFamily::C2C3;
    Int m = 1;
    Int q = 0, c1 = 0, rad1 = 1, c2 = 0, rad2 = 1;  // (q + c1 sqrt(rad1) +- c2 sqrt(rad2)) / m
};

struct CongruenceCase {
    std::string id;
    std::string anchor;
    CaseStatus status = CaseStatus::Conjecture;
    CaseKind kind = CaseKind::Sum;
    unsigned long min_p = 3;
    std::vector<Int> exclude;
    std::optional<Guard> admit;

    SumSpec sum;                         // Sum
    SumSpec rhs;                         // Relation
    ExprPtr factor;                      // Relation: lhs == factor * rhs
    unsigned rel_mod_exp = 2;
    std::string grid_kind;               // RelationGrid
    std::vector<long> grid;
    std::string theorem_id;              // Theorem
    int samples = 5;
    SurdGeoSpec surd;                    // SurdGeo / LegendreSurd
    std::string value_id;                // Value
    std::vector<Branch> branches;
};

enum class VerdictKind { Holds, Fails, Skipped };

struct Verdict {
    VerdictKind kind;
    std::string detail;
    static Verdict holds() { return {VerdictKind::Holds, {}}; }
    static Verdict fails(std::string d) { return {VerdictKind::Fails, std::move(d)}; }
    static Verdict skipped(std::string d) { return {VerdictKind::Skipped, std::move(d)}; }
};

Verdict verify_case(const CongruenceCase& c, const Int& p);

std::vector<CongruenceCase> load_congruence_catalog(const std::string& path);
std::string default_congruence_catalog_path();

// ------------------------------------------------------------- theorems ---

// (1.10) directly at given parameters.
Verdict verify_theorem_1_1(const Int& p, unsigned a, const Rat& h, const Rat& x, const Rat& y);
// (1.11)-(1.14) displays, which = 11..14.
Verdict verify_theorem_1_1_display(int which, const Int& p, unsigned a, const Rat& x, const Rat& y);
// specializations (1.3)-(1.6), which = 3..6.
Verdict verify_specialization_1_3(int which, const Int& p, const Rat& x);
// (1.16)-(1.19), which = 16..19; works in the {1,s,t,st} extension ring.
Verdict verify_theorem_1_2(int which, const Int& p, unsigned a, const Rat& x, const Int& b, const Int& c);
Verdict verify_lemma_3_1(const Int& p);
Verdict verify_lemma_3_2(const Int& p);
// (5.5)-(5.8), variant = 55..58, rational parameters.
Verdict verify_duality(int variant, const Int& p, const Rat& b, const Rat& c, const Rat& m);
// (5.9) mod p.
Verdict verify_duality_5_9(const Int& p, const Int& b, const Int& c, const Rat& m, unsigned h);

// ----------------------------------------------------------------- scan ---

struct ScanOptions {
    std::uint64_t lo = 3, hi = 200;
    std::string status = "all";  // proved | conjecture | all
    std::string id_glob = "*";
    unsigned workers = 1;
};

struct ScanRecord {
    std::string id;
    std::uint64_t p;
    Verdict verdict;
};

struct ScanReport {
    std::vector<ScanRecord> records;  // ordered by (case id, prime)
    std::size_t holds = 0, fails = 0, skipped = 0;
    std::size_t proved_fails = 0, conjecture_fails = 0;
    bool truncated = false;
};

// Runs every selected case at every prime in range; deterministic output
// ordering regardless of worker count. `interrupt` (optional) stops the scan
// early, leaving report.truncated set.
ScanReport scan_catalog(const std::vector<CongruenceCase>& cases, const ScanOptions& opt,
                        const bool* interrupt = nullptr);

bool glob_match(const std::string& pattern, const std::string& text);

}  // namespace trinom

#endif
