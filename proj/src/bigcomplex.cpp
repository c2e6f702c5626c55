#include "macd/bigcomplex.hpp"

#include <cmath>

namespace macd {

namespace {

unsigned bits_to_digits10(unsigned bits) {
    return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
}

BigFloat tiny_for_zero() { return pow2(-static_cast<long>(current_precision_bits() * 3 / 4)); }

}  // namespace

PrecisionGuard::PrecisionGuard(unsigned bits) : saved_(BigFloat::default_precision()) {
    if (bits < 64) bits = 64;
    BigFloat::default_precision(bits_to_digits10(bits));
}

PrecisionGuard::~PrecisionGuard() { BigFloat::default_precision(saved_); }

unsigned current_precision_bits() {
    return static_cast<unsigned>(std::floor((BigFloat::default_precision() - 1) * 3.3219280948873623));
}

BigFloat to_big(const Rational& r) {
    BigFloat x;
    mpfr_set_q(x.backend().data(), r.get_mpq_t(), MPFR_RNDN);
    return x;
}

BigFloat pow2(long e) {
    BigFloat x(1);
    mpfr_mul_2si(x.backend().data(), x.backend().data(), e, MPFR_RNDN);
    return x;
}

BigComplex& BigComplex::operator+=(const BigComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& o) {
    BigFloat r = re * o.re - im * o.im;
    BigFloat i = re * o.im + im * o.re;
    re = r;
    im = i;
    return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& o) {
    BigFloat d = o.re * o.re + o.im * o.im;
    if (d == 0) throw PoleError("complex division by zero");
    BigFloat r = (re * o.re + im * o.im) / d;
    BigFloat i = (im * o.re - re * o.im) / d;
    re = r;
    im = i;
    return *this;
}

BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }
BigComplex operator-(const BigComplex& a) { return BigComplex(-a.re, -a.im); }

BigFloat abs(const BigComplex& z) { return boost::multiprecision::hypot(z.re, z.im); }

BigComplex exp(const BigComplex& z) {
    BigFloat m = boost::multiprecision::exp(z.re);
    return BigComplex(m * boost::multiprecision::cos(z.im), m * boost::multiprecision::sin(z.im));
}

BigComplex log(const BigComplex& z) {
    if (z.re == 0 && z.im == 0) throw PoleError("log of zero");
    return BigComplex(boost::multiprecision::log(abs(z)), boost::multiprecision::atan2(z.im, z.re));
}

BigComplex ipow(const BigComplex& z, long k) {
    if (k < 0) return BigComplex(1) / ipow(z, -k);
    BigComplex r(1), b = z;
    while (k) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

BigComplex real_pow(const BigFloat& q, const BigComplex& c) {
    if (q <= 0) throw std::invalid_argument("real_pow needs q > 0");
    BigFloat lq = boost::multiprecision::log(q);
    return exp(BigComplex(c.re * lq, c.im * lq));
}

bool is_integer(const BigComplex& c, long* k) {
    BigFloat tol = pow2(-static_cast<long>(current_precision_bits() / 2));
    if (boost::multiprecision::abs(c.im) > tol) return false;
    BigFloat r = boost::multiprecision::round(c.re);
    if (boost::multiprecision::abs(c.re - r) > tol) return false;
    if (k) *k = r.convert_to<long>();
    return true;
}

std::string to_string(const BigComplex& z, int digits) {
    std::string s = z.re.str(digits, std::ios::scientific);
    if (z.im != 0) {
        std::string i = z.im.str(digits, std::ios::scientific);
        if (i[0] != '-') i = "+" + i;
        s += i + "i";
    }
    return s;
}

BigFloat rel_err(const BigComplex& a, const BigComplex& b) {
    BigFloat d = abs(a - b);
    BigFloat m = abs(b);
    if (m == 0) return d;
    return d / m;
}

Estimate poch_inf(const BigComplex& a, const Rational& q) {
    if (!(q > 0 && q < 1)) throw std::invalid_argument("infinite products need 0 < q < 1");
    BigFloat qq = to_big(q);
    BigFloat eps = pow2(-static_cast<long>(current_precision_bits() + 16));
    BigComplex p(1), x = a;
    BigFloat ax = abs(a);
    const long cap = 1000000;
    long j = 0;
    for (; j < cap; ++j) {
        if (ax * qq < eps * (1 - qq) && ax < BigFloat(0.5)) break;
        p *= BigComplex(1) - x;
        x.re *= qq;
        x.im *= qq;
        ax *= qq;
    }
    if (j == cap) throw PrecisionError("infinite product did not reach target");
    // remaining factors: |log prod| <= 2 sum |x q^j| = 2|x|/(1-q)
    BigFloat tail = 2 * ax / (1 - qq);
    BigFloat rounding = pow2(-static_cast<long>(current_precision_bits()) + 4) * (j + 1);
    return {p, abs(p) * (tail + rounding)};
}

namespace {

Estimate finite_poch(const BigComplex& a, const Rational& q, long k, bool reciprocal) {
    BigFloat qq = to_big(q);
    BigComplex p(1);
    BigFloat tiny = tiny_for_zero();
    bool zero = false;
    if (k >= 0) {
        BigComplex x = a;
        for (long j = 0; j < k; ++j) {
            BigComplex f = BigComplex(1) - x;
            if (abs(f) < tiny) zero = true;
            p *= f;
            x.re *= qq;
            x.im *= qq;
        }
        if (zero) {
            if (reciprocal) throw PoleError("1/(a;q)_k with a vanishing factor");
            return {BigComplex(0), BigFloat(0)};
        }
        if (reciprocal) p = BigComplex(1) / p;
    } else {
        BigFloat qi = 1 / qq;
        BigComplex x = a;
        x.re *= qi;
        x.im *= qi;
        for (long j = 1; j <= -k; ++j) {
            BigComplex f = BigComplex(1) - x;
            if (abs(f) < tiny) zero = true;
            p *= f;
            x.re *= qi;
            x.im *= qi;
        }
        if (zero) {
            if (!reciprocal) throw PoleError("(a;q)_k with negative k has a vanishing factor");
            return {BigComplex(0), BigFloat(0)};
        }
        if (!reciprocal) p = BigComplex(1) / p;
    }
    BigFloat rounding = pow2(-static_cast<long>(current_precision_bits()) + 4) * (std::labs(k) + 1);
    return {p, abs(p) * rounding};
}

}  // namespace

Estimate poch_complex_est(const BigComplex& a, const Rational& q, const BigComplex& c) {
    long k;
    if (is_integer(c, &k)) return finite_poch(a, q, k, false);
    Estimate num = poch_inf(a, q);
    Estimate den = poch_inf(a * real_pow(to_big(q), c), q);
    BigFloat ad = abs(den.value);
    if (ad < tiny_for_zero()) throw PoleError("(a;q)_c denominator vanishes");
    BigComplex v = num.value / den.value;
    BigFloat rel = den.error / ad;
    if (abs(num.value) > 0) rel += num.error / abs(num.value);
    else rel += num.error;
    return {v, abs(v) * rel + (abs(num.value) == 0 ? num.error / ad : BigFloat(0))};
}

BigComplex poch_complex(const BigComplex& a, const Rational& q, const BigComplex& c, unsigned precision) {
    PrecisionGuard g(precision + 32);
    return poch_complex_est(a, q, c).value;
}

Estimate rpoch_complex_est(const BigComplex& a, const Rational& q, const BigComplex& c) {
    long k;
    if (is_integer(c, &k)) return finite_poch(a, q, k, true);
    Estimate num = poch_inf(a, q);
    BigFloat an = abs(num.value);
    if (an < tiny_for_zero()) throw PoleError("1/(a;q)_c: (a;q)_inf vanishes");
    Estimate den = poch_inf(a * real_pow(to_big(q), c), q);
    BigComplex v = den.value / num.value;
    BigFloat rel = num.error / an;
    BigFloat err = abs(v) * rel + den.error / an;
    return {v, err};
}

Estimate qt_power_est(const BigComplex& x, const BigComplex& c, const Rational& q, const Rational& t) {
    BigComplex tx = BigComplex(t) * x;
    Estimate a = poch_complex_est(tx, q, c);
    Estimate b = rpoch_complex_est(BigComplex(t), q, c);
    Estimate d = poch_complex_est(BigComplex(q) / tx, q, -c);
    Estimate e = rpoch_complex_est(BigComplex(q / t), q, -c);
    BigComplex v = a.value * b.value * d.value * e.value;
    auto rel = [](const Estimate& s) {
        BigFloat m = abs(s.value);
        return m == 0 ? BigFloat(0) : BigFloat(s.error / m);
    };
    return {v, abs(v) * (rel(a) + rel(b) + rel(d) + rel(e))};
}

BigComplex qt_power(const BigComplex& x, const BigComplex& c, const Rational& q, const Rational& t, unsigned precision) {
    PrecisionGuard g(precision + 32);
    return qt_power_est(x, c, q, t).value;
}

}  // namespace macd
