#pragma once

#include <map>
#include <string>
#include <vector>

#include "macd/bigcomplex.hpp"
#include "macd/partitions.hpp"
#include "macd/qkernel.hpp"

namespace macd {

using Exponent = std::vector<int>;

// Sparse polynomial in x_1..x_n with exact coefficients.
class SymPoly {
public:
    SymPoly() = default;
    explicit SymPoly(int nvars) : nvars_(nvars) {}
    static SymPoly constant(int nvars, const Rational& c);

    int nvars() const { return nvars_; }
    const std::map<Exponent, Rational>& terms() const { return terms_; }
    Rational coeff(const Exponent& e) const;
    void add_term(const Exponent& e, const Rational& c);
    bool is_zero() const { return terms_.empty(); }
    int degree() const;
    bool is_symmetric() const;

    SymPoly& operator+=(const SymPoly& o);
    SymPoly& operator-=(const SymPoly& o);
    SymPoly& operator*=(const Rational& c);
    friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
    friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
    friend SymPoly operator*(SymPoly a, const Rational& c) { return a *= c; }
    friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
    bool operator==(const SymPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    Rational eval(const std::vector<Rational>& x) const;
    BigComplex eval(const std::vector<BigComplex>& x) const;
    // graded-lex order, highest first
    std::string str() const;

private:
    int nvars_ = 0;
    std::map<Exponent, Rational> terms_;
};

enum class Basis { monomial, powersum, elementary, complete, g };

struct BasisExpansion {
    Basis basis = Basis::powersum;
    std::map<Partition, Rational> coeffs;

    bool operator==(const BasisExpansion& o) const { return basis == o.basis && coeffs == o.coeffs; }
};

// symmetric functions in infinitely many variables, stored in the p basis
using PExp = std::map<Partition, Rational>;

PExp p_add(const PExp& a, const PExp& b, const Rational& s = 1);
PExp p_scale(const PExp& a, const Rational& s);
PExp p_mul(const PExp& a, const PExp& b);
PExp p_one();
// restriction to x_1..x_n
SymPoly restrict_to(const PExp& f, int nvars);

SymPoly monomial_sym(const Partition& lambda, int nvars, bool allow_zero = false);
SymPoly powersum(int k, int nvars);
SymPoly elementary(int k, int nvars);
SymPoly complete(int k, int nvars);
SymPoly g_k(int k, int nvars, const QtPoint& pt);

PExp g_k_p(int k, const QtPoint& pt);
PExp e_k_p(int k);

// coefficient of m_lambda in p_rho, both partitions of d
const std::map<Partition, std::map<Partition, Rational>>& p_to_m(int d);
// coefficient of p_rho in m_lambda
const std::map<Partition, std::map<Partition, Rational>>& m_to_p(int d);

BasisExpansion to_powersum(const SymPoly& f);
SymPoly from_powersum(const BasisExpansion& f, int nvars);

Rational scalar_product(const BasisExpansion& f, const BasisExpansion& g, const QtPoint& pt);
Rational scalar_product(const PExp& f, const PExp& g, const QtPoint& pt);

// Gram-Schmidt in the monomial basis over dominance order
PExp macdonald_P_p(const Partition& lambda, const QtPoint& pt);
PExp macdonald_Q_p(const Partition& lambda, const QtPoint& pt);
SymPoly macdonald_P_gramschmidt(const Partition& lambda, int nvars, const QtPoint& pt);
SymPoly macdonald_Q(const Partition& lambda, int nvars, const QtPoint& pt);

// eps_{u,t}: p_r -> (1-u^r)/(1-t^r)
Rational hyper_specialize(const PExp& f, const Rational& u, const Rational& t);
Rational principal_specialize(const Partition& lambda, int N, const QtPoint& pt);
Rational hyper_specialize_P(const Partition& lambda, const Rational& u, int n, const QtPoint& pt);
Rational hyper_specialize_Q(const Partition& lambda, const Rational& u, int n, const QtPoint& pt);

}  // namespace macd
