#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <string>

#include "macd/qkernel.hpp"

namespace macd {

using BigFloat = boost::multiprecision::mpfr_float;

// Sets the MPFR working precision (in bits) for the lifetime of the guard.
// The Boost default precision is process-global, so numeric code runs
// single-threaded.
class PrecisionGuard {
public:
    explicit PrecisionGuard(unsigned bits);
    ~PrecisionGuard();
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    unsigned saved_;
};

unsigned current_precision_bits();
BigFloat to_big(const Rational& r);
BigFloat pow2(long e);

struct BigComplex {
    BigFloat re, im;

    BigComplex() : re(0), im(0) {}
    BigComplex(const BigFloat& r) : re(r), im(0) {}
    BigComplex(const BigFloat& r, const BigFloat& i) : re(r), im(i) {}
    BigComplex(const Rational& r) : re(to_big(r)), im(0) {}
    BigComplex(int r) : re(r), im(0) {}
    BigComplex(const Rational& r, const Rational& i) : re(to_big(r)), im(to_big(i)) {}

    BigComplex& operator+=(const BigComplex& o);
    BigComplex& operator-=(const BigComplex& o);
    BigComplex& operator*=(const BigComplex& o);
    BigComplex& operator/=(const BigComplex& o);
};

BigComplex operator+(BigComplex a, const BigComplex& b);
BigComplex operator-(BigComplex a, const BigComplex& b);
BigComplex operator*(BigComplex a, const BigComplex& b);
BigComplex operator/(BigComplex a, const BigComplex& b);
BigComplex operator-(const BigComplex& a);

BigFloat abs(const BigComplex& z);
BigComplex exp(const BigComplex& z);
// principal branch
BigComplex log(const BigComplex& z);
BigComplex ipow(const BigComplex& z, long k);
// q^c for real 0 < q, principal real logarithm of q
BigComplex real_pow(const BigFloat& q, const BigComplex& c);
bool is_integer(const BigComplex& c, long* k = nullptr);
std::string to_string(const BigComplex& z, int digits = 25);
// relative distance |a-b|/max(|b|, tiny)
BigFloat rel_err(const BigComplex& a, const BigComplex& b);

struct Estimate {
    BigComplex value;
    BigFloat error;  // absolute error bound
};

// (a;q)_c = (a;q)_inf/(aq^c;q)_inf for real 0<q<1
Estimate poch_complex_est(const BigComplex& a, const Rational& q, const BigComplex& c);
BigComplex poch_complex(const BigComplex& a, const Rational& q, const BigComplex& c, unsigned precision);
// 1/(a;q)_c, zero where (a;q)_c has a pole (e.g. 1/(q;q)_{-m} = 0)
Estimate rpoch_complex_est(const BigComplex& a, const Rational& q, const BigComplex& c);
// (a;q)_inf
Estimate poch_inf(const BigComplex& a, const Rational& q);

// x^{[c]} = (tx)_c/(t)_c (q/tx)_{-c}/(q/t)_{-c}
BigComplex qt_power(const BigComplex& x, const BigComplex& c, const Rational& q, const Rational& t, unsigned precision);
Estimate qt_power_est(const BigComplex& x, const BigComplex& c, const Rational& q, const Rational& t);

}  // namespace macd
