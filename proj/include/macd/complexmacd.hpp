#pragma once

#include <vector>

#include "macd/bigcomplex.hpp"
#include "macd/hyperseries.hpp"
#include "macd/partitions.hpp"

namespace macd {

// x[0] is the distinguished variable x_0
struct ComplexEvalContext {
    Rational q{1, 2};
    Rational t{1, 3};
    std::vector<BigComplex> x;
    unsigned precision = 192;
    TruncationPolicy truncation;

    void validate(bool nonterminating) const;
};

// q^c for real 0 < q < 1, exact when c is an integer
BigComplex q_power(const Rational& q, const BigComplex& c);

// recursion coefficient c_theta(u) at complex u
BigComplex recursion_coeff_complex(const MultiIndex& theta, const std::vector<BigComplex>& u, const Rational& q,
                                   const Rational& t);

Estimate g_complex_est(const BigComplex& c, const ComplexEvalContext& ctx);
BigComplex g_complex(const BigComplex& c, const ComplexEvalContext& ctx);

Estimate Q_complex_est(const ComplexPartition& lambda, const ComplexEvalContext& ctx);
BigComplex Q_complex(const ComplexPartition& lambda, const ComplexEvalContext& ctx);

// closed product for eps_{u,t} Q_lambda
BigComplex evaluation_formula(const ComplexPartition& lambda, const BigComplex& u, const QtPoint& pt,
                              unsigned precision = 192);
// closed product for Q_lambda(x) in a single variable
BigComplex single_variable_formula(const ComplexPartition& lambda, const BigComplex& x, const QtPoint& pt,
                                   unsigned precision = 192);

// 2phi1(a, b; c; q, z) summed until the policy triggers
Estimate phi21(const BigComplex& a, const BigComplex& b, const BigComplex& c, const BigComplex& z, const Rational& q,
               const TruncationPolicy& policy);

struct DualityResult {
    BigComplex lhs;    // Q_(c)(q^d t, 1) / Q_(c)(t, 1)
    BigComplex rhs;    // Q_(d)(q^c t, 1) / Q_(d)(t, 1)
    BigComplex heine;  // lhs through the iterated Heine transformation
    BigFloat error;    // combined truncation estimate
};

// throws ConvergenceError unless |q^{1-c}/t^2| < 1 and |q^{1-d}/t^2| < 1, or c, d
// are both nonnegative integers (all sums terminate)
DualityResult one_row_duality(const BigComplex& c, const BigComplex& d, const QtPoint& pt, unsigned precision = 192,
                              const TruncationPolicy& policy = {});

struct InductiveStep {
    BigComplex recursion_sum;  // sum_theta c_theta eps(Q_(lam_{n+1}-|theta|)) eps(Q_(lam_i+theta_i))
    BigComplex product;        // evaluation_formula(lam)
    NumericPair nonterminating;  // multivariable nonterminating 6phi5 at the substituted parameters
    BigFloat error;
};

InductiveStep inductive_step(const ComplexPartition& lambda, const BigComplex& u, const QtPoint& pt,
                             unsigned precision = 192, const TruncationPolicy& policy = {});

}  // namespace macd
