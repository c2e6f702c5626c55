#pragma once

#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "macd/bigcomplex.hpp"
#include "macd/kernel.hpp"
#include "macd/qkernel.hpp"

namespace macd {

// Parameters of one identity instance. Scalars are named ("a", "b", "z", ...),
// vectors have length n ("u", "c", "t", ...).
struct IdParams {
    Rational q{1, 2};
    std::map<std::string, Rational> s;
    std::map<std::string, std::vector<Rational>> v;
    int n = 1;
    int M = 0;
    std::vector<int> m;

    const Rational& at(const std::string& name) const;
    const std::vector<Rational>& vec(const std::string& name) const;
    std::map<std::string, std::string> describe() const;
};

enum class Region { simplex, shell, box, orthant, partition_pieri };

struct TruncationPolicy {
    double target = 1e-15;
    int consecutive = 3;
    int max_shell = 600;
    int fixed_shells = -1;  // >= 0: sum exactly the shells 0..fixed_shells

    void validate() const;
};

struct ExactPair {
    Rational lhs, rhs;
};

struct NumericPair {
    Estimate lhs;
    BigComplex rhs;
    int shells = 0;

    // |lhs - rhs| <= max(target |rhs|, 10 tail)
    bool agrees(double target) const;
};

using ExactTerm = std::function<Rational(const IdParams&, const MultiIndex&)>;
using ExactSide = std::function<Rational(const IdParams&)>;
using NumericEval = std::function<NumericPair(const IdParams&, const TruncationPolicy&)>;

struct IdentitySpec {
    std::string id;
    std::string title;
    Region region = Region::simplex;
    bool terminating = true;
    bool multivariable = true;
    std::vector<std::string> scalars;
    std::vector<std::string> vectors;
    std::string size;  // "M", "m", "lambda" or empty
    ExactTerm term;
    ExactSide rhs;
    NumericEval numeric;
    std::function<Rational(const IdParams&)> argument;  // |argument| < 1 for convergence
};

const std::vector<IdentitySpec>& identity_registry();
// throws std::out_of_range for unknown ids
const IdentitySpec& find_identity(const std::string& id);

std::vector<MultiIndex> region_points(const IdentitySpec& spec, const IdParams& p);
ExactPair eval_terminating(const IdentitySpec& spec, const IdParams& p);
NumericPair eval_nonterminating(const IdentitySpec& spec, const IdParams& p, const TruncationPolicy& policy,
                                unsigned precision = 192);

// sum of term over shells |k| = 0, 1, ... with a geometric tail estimate
Estimate sum_shells(int n, const std::function<BigComplex(const MultiIndex&)>& term,
                    const TruncationPolicy& policy, int* shells_used = nullptr);

struct DrawRecord {
    int draw = 0;
    std::map<std::string, std::string> params;
    std::string lhs, rhs;
    std::string error_bound;
    std::string status;  // PASS, FAIL, ERROR
    std::string message;
};

struct IdentityReport {
    std::string id;
    int n = 1;
    std::vector<int> sizes;
    std::uint64_t seed = 0;
    std::vector<DrawRecord> records;

    bool passed() const;
};

// sizes: {M} for simplex/shell regions, box sizes for box regions, the
// partition for the specialized displays; empty draws sizes at random
IdentityReport check_identity(const std::string& id, int n, const std::vector<int>& sizes, int draws,
                              std::uint64_t seed, const TruncationPolicy& policy = {}, unsigned precision = 192);

// individual evaluators, exposed for the reduction and degeneration checks
namespace ids {

ExactPair six_phi_five(const Rational& a, const Rational& b, const Rational& c, int M, const Rational& q);
ExactPair jackson(const Rational& a, const Rational& b, const Rational& c, const Rational& d, int M,
                  const Rational& q);
// conjecture with the literal k_i + m_i exponent in the determinant entries
ExactPair cn87n_literal(const IdParams& p);
// nonterminating determinant 6phi5 at complex parameters
NumericPair an65nt_complex(const BigComplex& b, const BigComplex& d, const BigComplex& t0,
                           const std::vector<BigComplex>& t, const std::vector<BigComplex>& u, const Rational& q,
                           const TruncationPolicy& policy);

}  // namespace ids

// Specialized Pieri and recursion displays at lam = (lam_1, ..., lam_{n+1})
ExactPair pieri_specialized(const std::vector<int>& lam, const Rational& u, const Rational& q, const Rational& t);
ExactPair recursion_specialized(const std::vector<int>& lam, const Rational& u, const Rational& q,
                                const Rational& t);
// the same instances written through the registered an65 / an65n-new sums
IdParams pieri_as_an65(const std::vector<int>& lam, const Rational& u, const Rational& q, const Rational& t);
IdParams recursion_as_an65n(const std::vector<int>& lam, const Rational& u, const Rational& q, const Rational& t);

struct BridgeCheck {
    bool pieri_sum = false;        // eps(Q_mu Q_(m)) = sum_theta d_theta eps(Q_...)
    bool pieri_lhs = false;        // expansion / norm = display lhs
    bool pieri_rhs = false;        // product / norm = display rhs
    bool recursion_sum = false;    // eps(Q_lam) = sum_theta c_theta eps(Q_(.)) eps(Q_...)
    bool recursion_lhs = false;
    bool recursion_rhs = false;
    bool pieri_registered = false;      // display equals the an65 instance
    bool recursion_registered = false;  // display equals the an65n-new instance

    bool all() const;
};

BridgeCheck bridge_check(const std::vector<int>& lam, const Rational& u, const Rational& q, const Rational& t);

}  // namespace macd
