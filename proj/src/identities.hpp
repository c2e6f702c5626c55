#pragma once

#include <map>
#include <string>
#include <vector>

#include "macd/hyperseries.hpp"
#include "series_util.hpp"

namespace macd::detail {

template <class T>
struct Vals {
    T q;
    std::map<std::string, T> s;
    std::map<std::string, std::vector<T>> v;
    int n = 1;
    int M = 0;
    std::vector<int> m;

    const T& operator[](const std::string& name) const { return s.at(name); }
    const std::vector<T>& vec(const std::string& name) const { return v.at(name); }
    T qp(long k) const { return tpow(q, k); }
};

template <class T>
Vals<T> vals(const IdParams& p) {
    Vals<T> r;
    r.q = T(p.q);
    for (const auto& [k, x] : p.s) r.s.emplace(k, T(x));
    for (const auto& [k, x] : p.v) r.v.emplace(k, convert<T>(x));
    r.n = p.n;
    r.M = p.M;
    r.m = p.m;
    return r;
}

// prod_{i<j} (u_i q^{k_i} - u_j q^{k_j})/(u_i - u_j)
template <class T>
T vandermonde_ratio(const std::vector<T>& u, const MultiIndex& k, const T& q) {
    T r(1);
    int n = static_cast<int>(u.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            r *= tdiv(u[i] * tpow(q, k[i]) - u[j] * tpow(q, k[j]), u[i] - u[j]);
    return r;
}

// (a_1, ..., a_r; q)_inf / (b_1, ..., b_s; q)_inf
BigComplex inf_ratio(const std::vector<BigComplex>& num, const std::vector<BigComplex>& den, const Rational& q);

using NumericTerm = BigComplex (*)(const Vals<BigComplex>&, const MultiIndex&);
using NumericRhs = BigComplex (*)(const Vals<BigComplex>&, const Rational& q);

NumericPair numeric_sum(const IdParams& p, const TruncationPolicy& policy, NumericTerm term, NumericRhs rhs);

// random parameter helpers
Rational draw_positive_q(std::mt19937_64& rng);
std::vector<Rational> draw_distinct(int n, std::mt19937_64& rng);
IdParams draw_generic(const IdentitySpec& spec, int n, const std::vector<int>& sizes, std::mt19937_64& rng,
                      bool positive_q);

void register_classical(std::vector<IdentitySpec>& reg);
void register_new(std::vector<IdentitySpec>& reg);
void register_specialized(std::vector<IdentitySpec>& reg);

}  // namespace macd::detail
