#pragma once

#include <cstdint>
#include <random>

#include "macd/qkernel.hpp"

namespace macd {

// one generator per (seed, draw) pair
std::mt19937_64 rng_for(std::uint64_t seed, std::uint64_t draw);

// a/b with a in [-9,9]\{0}, b in [1,9], |a/b| != 1
Rational draw_rational(std::mt19937_64& rng);
// q, t drawn as above with q^i t^j != 1 for |i|,|j| <= 12
QtPoint draw_qt_point(std::mt19937_64& rng);
bool multiplicatively_dependent(const Rational& q, const Rational& t, int bound = 12);

}  // namespace macd
