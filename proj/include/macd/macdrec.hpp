#pragma once

#include <vector>

#include "macd/kernel.hpp"
#include "macd/symfun.hpp"

namespace macd {

struct PieriCoeff {
    MultiIndex theta;
    std::vector<Rational> u;
    Rational value;
};

struct RecursionCoeff {
    MultiIndex theta;
    std::vector<Rational> u;
    Rational value;
};

// d_theta(u_1..u_n) of the Pieri formula
Rational pieri_coeff(const MultiIndex& theta, const std::vector<Rational>& u, const QtPoint& pt);
// c_theta(u_1..u_n) of the recursion formula (prefactor times determinant over Vandermonde)
Rational recursion_coeff(const MultiIndex& theta, const std::vector<Rational>& u, const QtPoint& pt);
// n = 1 closed form of the recursion coefficient
Rational recursion_coeff_one(int theta, const Rational& u, const QtPoint& pt);

// u_i = q^{lambda_i - m} t^{n-i}, lambda padded to n parts
std::vector<Rational> pieri_u(const Partition& lambda, int m, int n, const QtPoint& pt);

struct PieriTerm {
    MultiIndex theta;
    Rational coeff;
    Partition index;
};

// nonzero summands of the Pieri expansion of Q_lambda Q_(m) whose index is a partition
std::vector<PieriTerm> pieri_terms(const Partition& lambda, int m, int n, const QtPoint& pt);

PExp pieri_expand_p(const Partition& lambda, int m, int n, const QtPoint& pt);
SymPoly pieri_expand(const Partition& lambda, int m, int n, int nvars, const QtPoint& pt);

// Q_lambda built from one-row functions by the recursion formula
PExp recursion_Q_p(const Partition& lambda, const QtPoint& pt);
SymPoly recursion_Q(const Partition& lambda, int nvars, const QtPoint& pt);

// Q_lambda by solving the Pieri formula for its leading term
PExp pieri_product_Q_p(const Partition& lambda, const QtPoint& pt);
SymPoly pieri_product_Q(const Partition& lambda, int nvars, const QtPoint& pt);

// P_lambda built from elementary functions by the dual recursion
PExp dual_recursion_P_p(const Partition& lambda, const QtPoint& pt);
SymPoly dual_recursion_P(const Partition& lambda, int nvars, const QtPoint& pt);

// Pieri formula in exactly n variables, summed over |theta| = m only
SymPoly restricted_pieri(const Partition& lambda, int m, int n, const QtPoint& pt);
// the summands with |theta| < m, each restricted to n variables
std::vector<std::pair<PieriTerm, SymPoly>> restricted_pieri_dropped(const Partition& lambda, int m, int n,
                                                                     const QtPoint& pt);

}  // namespace macd
