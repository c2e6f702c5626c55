#include "macd/qkernel.hpp"

#include <stdexcept>

namespace macd {

Rational parse_rational(const std::string& s) {
    std::string t;
    for (char c : s)
        if (c != ' ') t += c;
    if (t.empty()) throw std::invalid_argument("empty rational");
    auto slash = t.find('/');
    mpz_class num, den(1);
    if (num.set_str(t.substr(0, slash), 10) != 0) throw std::invalid_argument("bad rational: " + s);
    if (slash != std::string::npos && den.set_str(t.substr(slash + 1), 10) != 0)
        throw std::invalid_argument("bad rational: " + s);
    if (den == 0) throw std::invalid_argument("zero denominator: " + s);
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational qpow(const Rational& x, long k) {
    if (k == 0) return 1;
    if (k < 0) {
        if (x == 0) throw PoleError("0 raised to a negative power");
        Rational inv = 1 / x;
        return qpow(inv, -k);
    }
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(k));
    mpz_pow_ui(r.get_den_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

Rational poch_int(const Rational& a, const Rational& q, long k) {
    Rational r = 1;
    if (k >= 0) {
        Rational x = a;
        for (long j = 0; j < k; ++j) {
            r *= 1 - x;
            x *= q;
        }
        return r;
    }
    Rational qi = 1 / q;
    Rational x = a * qi;
    for (long j = 1; j <= -k; ++j) {
        r *= 1 - x;
        x *= qi;
    }
    if (r == 0) throw PoleError("(a;q)_k with negative k has a vanishing factor, a=" + to_string(a));
    return 1 / r;
}

Rational poch_multi(const std::vector<Rational>& as, const Rational& q, long k) {
    Rational r = 1;
    for (const auto& a : as) r *= poch_int(a, q, k);
    return r;
}

ZeroTracked& ZeroTracked::mul(const Rational& x) {
    if (x == 0)
        ++zeros_;
    else
        val_ *= x;
    return *this;
}

ZeroTracked& ZeroTracked::div(const Rational& x) {
    if (x == 0)
        --zeros_;
    else
        val_ /= x;
    return *this;
}

ZeroTracked& ZeroTracked::mul(const ZeroTracked& z) {
    val_ *= z.val_;
    zeros_ += z.zeros_;
    return *this;
}

ZeroTracked& ZeroTracked::div(const ZeroTracked& z) {
    val_ /= z.val_;
    zeros_ -= z.zeros_;
    return *this;
}

ZeroTracked& ZeroTracked::poch(const Rational& a, const Rational& q, long k, bool inverse) {
    if (k >= 0) {
        Rational x = a;
        for (long j = 0; j < k; ++j) {
            inverse ? div(1 - x) : mul(1 - x);
            x *= q;
        }
    } else {
        Rational qi = 1 / q;
        Rational x = a * qi;
        for (long j = 1; j <= -k; ++j) {
            inverse ? mul(1 - x) : div(1 - x);
            x *= qi;
        }
    }
    return *this;
}

ZeroTracked& ZeroTracked::pochs(const std::vector<Rational>& as, const Rational& q, long k) {
    for (const auto& a : as) poch(a, q, k);
    return *this;
}

ZeroTracked& ZeroTracked::ipochs(const std::vector<Rational>& as, const Rational& q, long k) {
    for (const auto& a : as) poch(a, q, k, true);
    return *this;
}

Rational ZeroTracked::value() const {
    if (zeros_ > 0) return 0;
    if (zeros_ < 0) throw PoleError("unbalanced vanishing denominator factor");
    return val_;
}

const Rational& QtPoint::at(const std::string& name) const {
    auto it = extras.find(name);
    if (it == extras.end()) throw std::out_of_range("missing parameter " + name);
    return it->second;
}

void QtPoint::validate() const {
    if (q == 0 || q == 1 || q == -1) throw std::invalid_argument("q must avoid 0, 1, -1");
    if (t == 0) throw std::invalid_argument("t must be nonzero");
}

}  // namespace macd
