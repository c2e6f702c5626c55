#pragma once

#include <vector>

#include "macd/bigcomplex.hpp"
#include "macd/kernel.hpp"
#include "macd/qkernel.hpp"

namespace macd::detail {

inline bool is_zero(const Rational& x) { return x == 0; }
inline bool is_zero(const BigComplex& z) { return z.re == 0 && z.im == 0; }

template <class T>
T tdiv_impl(const T& a, const T& b) {
    if (is_zero(b)) throw PoleError("vanishing denominator");
    return a / b;
}

template <class T>
T tpow_impl(const T& x, long k) {
    if (k < 0) {
        if (is_zero(x)) throw PoleError("zero to a negative power");
        return T(1) / tpow_impl(x, -k);
    }
    T r(1), b = x;
    while (k) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

inline Rational tdiv(const Rational& a, const Rational& b) { return tdiv_impl(a, b); }
inline BigComplex tdiv(const BigComplex& a, const BigComplex& b) { return tdiv_impl(a, b); }
inline Rational tpow(const Rational& x, long k) { return tpow_impl(x, k); }
inline BigComplex tpow(const BigComplex& x, long k) { return tpow_impl(x, k); }

// Product with optional zero tracking (the tracked mode counts exact zero
// factors; the strict mode rejects any zero denominator factor).
template <class T>
class Prod {
public:
    explicit Prod(const T& q, bool tracked = false) : q_(q), v_(1), zeros_(0), tracked_(tracked) {}

    Prod& mul(const T& x) {
        if (tracked_ && is_zero(x)) ++zeros_;
        else v_ *= x;
        return *this;
    }
    Prod& div(const T& x) {
        if (is_zero(x)) {
            if (!tracked_) throw PoleError("vanishing denominator factor");
            --zeros_;
        } else {
            v_ /= x;
        }
        return *this;
    }
    // (a;q)_k for either sign of k
    Prod& poch(const T& a, long k, bool inverse = false) {
        if (k >= 0) {
            T qj(1);
            for (long j = 0; j < k; ++j) {
                inverse ? div(T(1) - a * qj) : mul(T(1) - a * qj);
                qj *= q_;
            }
        } else {
            T qi = T(1) / q_, qj = qi;
            for (long j = 1; j <= -k; ++j) {
                inverse ? mul(T(1) - a * qj) : div(T(1) - a * qj);
                qj *= qi;
            }
        }
        return *this;
    }
    Prod& ipoch(const T& a, long k) { return poch(a, k, true); }
    Prod& pochs(std::initializer_list<T> as, long k) {
        for (const auto& a : as) poch(a, k);
        return *this;
    }
    Prod& ipochs(std::initializer_list<T> as, long k) {
        for (const auto& a : as) ipoch(a, k);
        return *this;
    }
    T value() const {
        if (zeros_ > 0) return T(0);
        if (zeros_ < 0) throw PoleError("unbalanced vanishing denominator factor");
        return v_;
    }

private:
    T q_;
    T v_;
    int zeros_;
    bool tracked_;
};

template <class T>
std::vector<T> convert(const std::vector<Rational>& v) {
    std::vector<T> out;
    out.reserve(v.size());
    for (const auto& x : v) out.emplace_back(x);
    return out;
}

template <class T>
T product(const std::vector<T>& v) {
    T r(1);
    for (const auto& x : v) r *= x;
    return r;
}

// n x n determinant by Gaussian elimination (generic scalar)
template <class T>
T small_det(std::vector<std::vector<T>> a) {
    int n = static_cast<int>(a.size());
    T d(1);
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int r = c; r < n; ++r)
            if (!is_zero(a[r][c])) {
                p = r;
                break;
            }
        if (p < 0) return T(0);
        if (p != c) {
            std::swap(a[p], a[c]);
            d = T(0) - d;
        }
        d *= a[c][c];
        for (int r = c + 1; r < n; ++r) {
            if (is_zero(a[r][c])) continue;
            T f = a[r][c] / a[c][c];
            for (int k = c; k < n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return d;
}

}  // namespace macd::detail
