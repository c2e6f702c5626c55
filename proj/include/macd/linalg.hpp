#pragma once

#include <vector>

#include "macd/qkernel.hpp"

namespace macd {

using Matrix = std::vector<std::vector<Rational>>;

// cofactor expansion up to 4x4, fraction-free elimination beyond
Rational det(const Matrix& a);
Rational det_cofactor(const Matrix& a);
Rational det_bareiss(Matrix a);

// solves a x = b; SingularError when a is singular
std::vector<Rational> solve(Matrix a, std::vector<Rational> b);
Matrix inverse(const Matrix& a);
Matrix identity_matrix(int n);
Matrix operator*(const Matrix& a, const Matrix& b);

}  // namespace macd
