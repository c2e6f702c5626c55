#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "macd/errors.hpp"

namespace macd {

using Rational = mpq_class;

Rational parse_rational(const std::string& s);
std::string to_string(const Rational& r);

// x^k for any integer k (throws PoleError for 0^negative)
Rational qpow(const Rational& x, long k);

// (a;q)_k, k of either sign
Rational poch_int(const Rational& a, const Rational& q, long k);
Rational poch_multi(const std::vector<Rational>& as, const Rational& q, long k);

// Product that counts exact zero factors separately, so that a summand with
// as many vanishing numerator factors as denominator factors keeps its finite
// value.
class ZeroTracked {
public:
    ZeroTracked() : val_(1), zeros_(0) {}
    explicit ZeroTracked(const Rational& v) : val_(1), zeros_(0) { mul(v); }

    ZeroTracked& mul(const Rational& x);
    ZeroTracked& div(const Rational& x);
    ZeroTracked& mul(const ZeroTracked& z);
    ZeroTracked& div(const ZeroTracked& z);
    // multiply by (a;q)_k (or divide, when inverse is set)
    ZeroTracked& poch(const Rational& a, const Rational& q, long k, bool inverse = false);
    ZeroTracked& ipoch(const Rational& a, const Rational& q, long k) { return poch(a, q, k, true); }
    ZeroTracked& pochs(const std::vector<Rational>& as, const Rational& q, long k);
    ZeroTracked& ipochs(const std::vector<Rational>& as, const Rational& q, long k);

    int zeros() const { return zeros_; }
    const Rational& nonzero_part() const { return val_; }
    Rational value() const;

private:
    Rational val_;
    int zeros_;
};

struct QtPoint {
    Rational q{1, 2};
    Rational t{1, 3};
    std::map<std::string, Rational> extras;

    const Rational& at(const std::string& name) const;
    void validate() const;
};

}  // namespace macd
