#pragma once

#include <functional>
#include <vector>

#include "macd/qkernel.hpp"

namespace macd {

using MultiIndex = std::vector<int>;

// componentwise m >= k
bool geq(const MultiIndex& m, const MultiIndex& k);
int total(const MultiIndex& m);

// all k with lo <= k <= hi, last coordinate fastest
std::vector<MultiIndex> box(const MultiIndex& lo, const MultiIndex& hi);
// theta in N^n with |theta| <= max_total (or == when exact is set)
std::vector<MultiIndex> compositions_upto(int n, int max_total, bool exact = false);

using RegionTerm = std::function<Rational(const MultiIndex&)>;

// sum of term(k) over the box lo <= k <= hi
Rational region_sum_serial(const MultiIndex& lo, const MultiIndex& hi, const RegionTerm& term);
// same sum with the box split across OpenMP threads; term must be thread-safe
Rational region_sum_parallel(const MultiIndex& lo, const MultiIndex& hi, const RegionTerm& term);

}  // namespace macd
