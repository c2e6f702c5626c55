#include "macd/complexmacd.hpp"

#include <stdexcept>

namespace macd {
namespace {

BigFloat tiny() { return pow2(-static_cast<long>(current_precision_bits() * 3 / 4)); }

BigComplex safe_div(const BigComplex& a, const BigComplex& b, const char* what) {
    if (abs(b) < tiny()) throw PoleError(what);
    return a / b;
}

BigFloat rel(const Estimate& e) {
    BigFloat m = abs(e.value);
    return m == 0 ? BigFloat(0) : BigFloat(e.error / m);
}

// (a;q)_k for integer k of either sign
BigComplex poch_k(const BigComplex& a, const Rational& q, long k) {
    BigComplex r(1);
    if (k >= 0) {
        for (long j = 0; j < k; ++j) r *= BigComplex(1) - a * BigComplex(qpow(q, j));
        return r;
    }
    for (long j = 1; j <= -k; ++j) r *= BigComplex(1) - a * BigComplex(qpow(q, -j));
    return safe_div(BigComplex(1), r, "negative-length Pochhammer symbol has a pole");
}

bool nonneg_integer(const BigComplex& c, long* k) { return is_integer(c, k) && *k >= 0; }

bool all_integer(const ComplexPartition& l) {
    for (const auto& c : l.parts)
        if (!is_integer(c)) return false;
    return true;
}

bool weakly_decreasing(const std::vector<BigComplex>& v) {
    long prev = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        long k;
        if (!is_integer(v[i], &k)) return true;
        if (i > 0 && k > prev) return false;
        prev = k;
    }
    return true;
}

TruncationPolicy inner_policy(const TruncationPolicy& p) {
    TruncationPolicy r = p;
    r.target = p.target * 1e-5;
    r.fixed_shells = -1;
    return r;
}

}  // namespace

void ComplexEvalContext::validate(bool nonterminating) const {
    if (!(q > 0 && q < 1)) throw std::invalid_argument("complex Macdonald functions need 0 < q < 1");
    if (t == 0) throw std::invalid_argument("t must be nonzero");
    if (x.empty()) throw LengthError("at least the variable x_0 is needed");
    if (abs(x[0]) == 0) throw PoleError("x_0 must be nonzero");
    truncation.validate();
    if (!nonterminating) return;
    BigComplex tx0 = BigComplex(t) * x[0];
    for (size_t i = 1; i < x.size(); ++i)
        if (abs(BigComplex(q) * x[i] / tx0) >= 1)
            throw ConvergenceError("one-row series needs |q x_i / t x_0| < 1");
}

BigComplex q_power(const Rational& q, const BigComplex& c) {
    long k;
    if (is_integer(c, &k)) return BigComplex(qpow(q, k));
    return real_pow(to_big(q), c);
}

BigComplex recursion_coeff_complex(const MultiIndex& theta, const std::vector<BigComplex>& u, const Rational& q,
                                   const Rational& t) {
    int n = static_cast<int>(theta.size());
    if (static_cast<int>(u.size()) != n) throw LengthError("theta and u differ in length");
    BigComplex Q(q), T(t), r(1);
    const char* what = "recursion coefficient";
    for (int i = 0; i < n; ++i) {
        int th = theta[i];
        BigComplex num = BigComplex(qpow(t, th)) * poch_k(Q / T, q, th) * poch_k(Q * u[i], q, th);
        BigComplex den = poch_k(Q, q, th) * poch_k(Q * T * u[i], q, th);
        r *= safe_div(num, den, what);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            BigComplex x = u[i] / u[j], qj = BigComplex(qpow(q, -theta[j]));
            BigComplex num = poch_k(Q * x / T, q, theta[i]) * poch_k(qj * T * x, q, theta[i]);
            BigComplex den = poch_k(Q * x, q, theta[i]) * poch_k(qj * x, q, theta[i]);
            r *= safe_div(num, den, what);
        }
    if (abs(r) == 0) return BigComplex(0);
    std::vector<BigComplex> x(n);
    for (int i = 0; i < n; ++i) x[i] = BigComplex(qpow(q, theta[i])) * u[i];
    BigComplex vdm(1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) vdm *= x[i] - x[j];
    std::vector<std::vector<BigComplex>> m(n, std::vector<BigComplex>(n));
    for (int i = 0; i < n; ++i) {
        BigComplex f(0);
        if (theta[i] != 0) {
            f = safe_div(BigComplex(1) - T * x[i], BigComplex(1) - x[i], what);
            for (int s = 0; s < n; ++s) f *= safe_div(u[s] - x[i], T * u[s] - x[i], what);
        }
        for (int j = 0; j < n; ++j) m[i][j] = ipow(x[i], n - 1 - j) * (BigComplex(1) - BigComplex(qpow(t, j)) * f);
    }
    // Gaussian elimination
    BigComplex det(1);
    for (int c = 0; c < n; ++c) {
        int p = c;
        for (int r2 = c + 1; r2 < n; ++r2)
            if (abs(m[r2][c]) > abs(m[p][c])) p = r2;
        if (abs(m[p][c]) == 0) return BigComplex(0);
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (int r2 = c + 1; r2 < n; ++r2) {
            BigComplex f = m[r2][c] / m[c][c];
            for (int k = c; k < n; ++k) m[r2][k] -= f * m[c][k];
        }
    }
    return r * safe_div(det, vdm, "coincident nodes in recursion coefficient");
}

Estimate g_complex_est(const BigComplex& c, const ComplexEvalContext& ctx) {
    long m = 0;
    bool terminating = nonneg_integer(c, &m);
    ctx.validate(!terminating && ctx.x.size() > 1);
    PrecisionGuard guard(ctx.precision);
    const Rational &q = ctx.q, &t = ctx.t;
    BigComplex Q(q), T(t), x0 = ctx.x[0], tx0 = T * x0;
    // (t x0)_c/(q)_c (q/t x0)_{-c}/(q/t)_{-c}
    Estimate a = poch_complex_est(tx0, q, c);
    Estimate b = rpoch_complex_est(Q, q, c);
    Estimate d = poch_complex_est(Q / tx0, q, -c);
    Estimate e = rpoch_complex_est(Q / T, q, -c);
    BigComplex pre = a.value * b.value * d.value * e.value;
    BigFloat pre_rel = rel(a) + rel(b) + rel(d) + rel(e);
    if (abs(pre) == 0) return {BigComplex(0), BigFloat(0)};
    int r = static_cast<int>(ctx.x.size()) - 1;
    if (r == 0) return {pre, abs(pre) * pre_rel};

    BigComplex qc = q_power(q, -c);
    BigComplex top = q_power(q, BigComplex(1) - c) / T;
    std::vector<BigComplex> ratio(r);
    for (int i = 0; i < r; ++i) ratio[i] = Q * ctx.x[i + 1] / tx0;
    auto term = [&](const MultiIndex& k) {
        int K = total(k);
        BigComplex v = safe_div(poch_k(qc, q, K), poch_k(top, q, K), "one-row series denominator vanishes");
        for (int i = 0; i < r; ++i) v *= poch_k(T, q, k[i]) / poch_k(Q, q, k[i]) * ipow(ratio[i], k[i]);
        return v;
    };
    TruncationPolicy pol = ctx.truncation;
    if (terminating) pol.fixed_shells = static_cast<int>(m);
    Estimate s = sum_shells(r, term, pol);
    BigComplex v = pre * s.value;
    return {v, abs(v) * (pre_rel + rel(s))};
}

BigComplex g_complex(const BigComplex& c, const ComplexEvalContext& ctx) { return g_complex_est(c, ctx).value; }

Estimate Q_complex_est(const ComplexPartition& lambda, const ComplexEvalContext& ctx) {
    const auto& l = lambda.parts;
    if (l.empty()) return {BigComplex(1), BigFloat(0)};
    if (l.size() == 1) return g_complex_est(l[0], ctx);
    PrecisionGuard guard(ctx.precision);
    int n = static_cast<int>(l.size()) - 1;
    const Rational &q = ctx.q, &t = ctx.t;
    std::vector<BigComplex> u(n);
    for (int i = 0; i < n; ++i) u[i] = q_power(q, l[i] - l[n]) * BigComplex(qpow(t, n - 1 - i));
    bool integral = all_integer(lambda);

    ComplexEvalContext inner = ctx;
    inner.precision = ctx.precision + 32;
    inner.truncation = inner_policy(ctx.truncation);
    BigFloat err(0);
    auto term = [&](const MultiIndex& th) -> BigComplex {
        ComplexPartition head;
        for (int i = 0; i < n; ++i) head.parts.push_back(l[i] + BigComplex(Rational(th[i])));
        if (integral && !weakly_decreasing(head.parts)) return BigComplex(0);
        Estimate g = g_complex_est(l[n] - BigComplex(Rational(total(th))), inner);
        if (abs(g.value) == 0) return BigComplex(0);
        BigComplex c = recursion_coeff_complex(th, u, q, t);
        Estimate h = Q_complex_est(head, inner);
        BigComplex v = c * g.value * h.value;
        err += abs(v) * (rel(g) + rel(h));
        return v;
    };
    TruncationPolicy pol = ctx.truncation;
    long last;
    if (integral && is_integer(l[n], &last) && last >= 0) pol.fixed_shells = static_cast<int>(last);
    Estimate s = sum_shells(n, term, pol);
    return {s.value, s.error + err};
}

BigComplex Q_complex(const ComplexPartition& lambda, const ComplexEvalContext& ctx) {
    return Q_complex_est(lambda, ctx).value;
}

BigComplex evaluation_formula(const ComplexPartition& lambda, const BigComplex& u, const QtPoint& pt,
                              unsigned precision) {
    PrecisionGuard guard(precision);
    const auto& l = lambda.parts;
    int n = static_cast<int>(l.size());
    const Rational &q = pt.q, &t = pt.t;
    BigComplex Q(q), r(1);
    for (int i = 0; i < n; ++i) {
        r *= poch_complex_est(u, q, l[i]).value;
        r *= rpoch_complex_est(BigComplex(q * qpow(t, n - 1 - i)), q, l[i]).value;
        r *= poch_complex_est(Q / u, q, -l[i]).value;
        r *= rpoch_complex_est(BigComplex(q * qpow(t, i)) / u, q, -l[i]).value;
        for (int j = i + 1; j < n; ++j) {
            r *= poch_complex_est(BigComplex(q * qpow(t, j - i)), q, l[i] - l[j]).value;
            r *= rpoch_complex_est(BigComplex(q * qpow(t, j - i - 1)), q, l[i] - l[j]).value;
        }
    }
    return r;
}

BigComplex single_variable_formula(const ComplexPartition& lambda, const BigComplex& x, const QtPoint& pt,
                                   unsigned precision) {
    PrecisionGuard guard(precision);
    const auto& l = lambda.parts;
    int n = static_cast<int>(l.size());
    const Rational &q = pt.q, &t = pt.t;
    BigComplex Q(q), tx = BigComplex(t) * x, r(1);
    for (int i = 0; i < n; ++i) {
        r *= poch_complex_est(tx, q, l[i]).value;
        r *= rpoch_complex_est(BigComplex(q * qpow(t, n - 1 - i)), q, l[i]).value;
        r *= poch_complex_est(Q / tx, q, -l[i]).value;
        r *= rpoch_complex_est(BigComplex(q * qpow(t, i - 1)), q, -l[i]).value;
        for (int j = i + 1; j < n; ++j) {
            r *= poch_complex_est(BigComplex(q * qpow(t, j - i)), q, l[i] - l[j]).value;
            r *= rpoch_complex_est(BigComplex(q * qpow(t, j - i - 1)), q, l[i] - l[j]).value;
        }
    }
    return r;
}

Estimate phi21(const BigComplex& a, const BigComplex& b, const BigComplex& c, const BigComplex& z, const Rational& q,
               const TruncationPolicy& policy) {
    BigComplex Q(q);
    auto term = [&](const MultiIndex& k) {
        return safe_div(poch_k(a, q, k[0]) * poch_k(b, q, k[0]), poch_k(c, q, k[0]) * poch_k(Q, q, k[0]),
                        "2phi1 denominator vanishes") *
               ipow(z, k[0]);
    };
    return sum_shells(1, term, policy);
}

namespace {

// Q_(c)(q^d t, 1)/Q_(c)(t, 1) from the one-row series
Estimate duality_side(const BigComplex& c, const BigComplex& d, const QtPoint& pt, unsigned precision,
                      const TruncationPolicy& policy) {
    ComplexEvalContext ctx;
    ctx.q = pt.q;
    ctx.t = pt.t;
    ctx.precision = precision;
    ctx.truncation = policy;
    BigComplex T(pt.t);
    ctx.x = {q_power(pt.q, d) * T, BigComplex(1)};
    Estimate top = g_complex_est(c, ctx);
    ctx.x = {T, BigComplex(1)};
    Estimate bottom = g_complex_est(c, ctx);
    BigComplex v = safe_div(top.value, bottom.value, "Q_(c)(t,1) vanishes");
    return {v, abs(v) * (rel(top) + rel(bottom))};
}

}  // namespace

DualityResult one_row_duality(const BigComplex& c, const BigComplex& d, const QtPoint& pt, unsigned precision,
                              const TruncationPolicy& policy) {
    PrecisionGuard guard(precision);
    const Rational &q = pt.q, &t = pt.t;
    BigComplex Q(q), T(t), T2 = T * T;
    BigComplex zc = q_power(q, BigComplex(1) - c) / T2, zd = q_power(q, BigComplex(1) - d) / T2;
    long cm, dm;
    bool terminating = nonneg_integer(c, &cm) && nonneg_integer(d, &dm);
    if (!terminating && (abs(zc) >= 1 || abs(zd) >= 1))
        throw ConvergenceError("duality needs |q^{1-c}/t^2| < 1 and |q^{1-d}/t^2| < 1");
    Estimate l = duality_side(c, d, pt, precision, policy);
    Estimate r = duality_side(d, c, pt, precision, policy);

    // prefactor at x_0 = q^d t, then the iterated Heine transformation of
    // 2phi1(q^{-c}, t; q^{1-c}/t; q, q^{1-d}/t^2)
    BigComplex x0 = q_power(q, d) * T, tx0 = T * x0;
    BigComplex pre = poch_complex_est(tx0, q, c).value * rpoch_complex_est(T2, q, c).value *
                     poch_complex_est(Q / tx0, q, -c).value * rpoch_complex_est(Q / T, q, -c).value;
    BigComplex A = q_power(q, -c), C = q_power(q, BigComplex(1) - c) / T, z = zd;
    BigComplex factor = poch_inf(C / T, q).value * poch_inf(T * z, q).value /
                        (poch_inf(C, q).value * poch_inf(z, q).value);
    TruncationPolicy hp = policy;
    if (terminating) hp.fixed_shells = static_cast<int>(dm);
    Estimate h = phi21(A * T * z / C, T, T * z, C / T, q, hp);
    DualityResult out;
    out.lhs = l.value;
    out.rhs = r.value;
    out.heine = pre * factor * h.value;
    out.error = l.error + r.error + abs(out.heine) * rel(h);
    return out;
}

InductiveStep inductive_step(const ComplexPartition& lambda, const BigComplex& u, const QtPoint& pt,
                             unsigned precision, const TruncationPolicy& policy) {
    const auto& l = lambda.parts;
    if (l.size() < 2) throw LengthError("inductive step needs at least two parts");
    PrecisionGuard guard(precision);
    int n = static_cast<int>(l.size()) - 1;
    const Rational &q = pt.q, &t = pt.t;
    std::vector<BigComplex> uu(n);
    for (int i = 0; i < n; ++i) uu[i] = q_power(q, l[i] - l[n]) * BigComplex(qpow(t, n - 1 - i));
    auto term = [&](const MultiIndex& th) {
        ComplexPartition head, last;
        for (int i = 0; i < n; ++i) head.parts.push_back(l[i] + BigComplex(Rational(th[i])));
        last.parts.push_back(l[n] - BigComplex(Rational(total(th))));
        return recursion_coeff_complex(th, uu, q, t) * evaluation_formula(last, u, pt, precision) *
               evaluation_formula(head, u, pt, precision);
    };
    InductiveStep out;
    Estimate s = sum_shells(n, term, policy);
    out.recursion_sum = s.value;
    out.product = evaluation_formula(lambda, u, pt, precision);
    BigComplex T(t);
    BigComplex b = q_power(q, l[n]) * u * BigComplex(qpow(t, 1 - n));
    BigComplex d = q_power(q, -l[n]);
    out.nonterminating = ids::an65nt_complex(b, d, T, std::vector<BigComplex>(n, T), uu, q, policy);
    out.error = s.error;
    return out;
}

}  // namespace macd
