#include "macd/macdrec.hpp"

#include <mutex>

#include "macd/linalg.hpp"

namespace macd {

namespace {

Rational ratio(const Rational& num, const Rational& den, const char* what) {
    if (den == 0) throw PoleError(what);
    return num / den;
}

}  // namespace

Rational pieri_coeff(const MultiIndex& theta, const std::vector<Rational>& u, const QtPoint& pt) {
    int n = static_cast<int>(theta.size());
    if (static_cast<int>(u.size()) != n) throw std::invalid_argument("theta and u differ in length");
    const Rational& q = pt.q;
    const Rational& t = pt.t;
    int T = total(theta);
    Rational r = 1;
    for (int k = 0; k < n; ++k) {
        int th = theta[k];
        Rational num = poch_int(t, q, th) * poch_int(qpow(q, T + 1) * u[k], q, th);
        Rational den = poch_int(q, q, th) * poch_int(qpow(q, T) * t * u[k], q, th);
        r *= ratio(num, den, "pieri coefficient");
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Rational x = u[i] / u[j];
            Rational num = poch_int(t * x, q, theta[i]) * poch_int(qpow(q, 1 - theta[j]) * x / t, q, theta[i]);
            Rational den = poch_int(q * x, q, theta[i]) * poch_int(qpow(q, -theta[j]) * x, q, theta[i]);
            r *= ratio(num, den, "pieri coefficient");
        }
    return r;
}

Rational recursion_coeff(const MultiIndex& theta, const std::vector<Rational>& u, const QtPoint& pt) {
    int n = static_cast<int>(theta.size());
    if (static_cast<int>(u.size()) != n) throw std::invalid_argument("theta and u differ in length");
    const Rational& q = pt.q;
    const Rational& t = pt.t;
    Rational r = 1;
    for (int i = 0; i < n; ++i) {
        int th = theta[i];
        Rational num = qpow(t, th) * poch_int(q / t, q, th) * poch_int(q * u[i], q, th);
        Rational den = poch_int(q, q, th) * poch_int(q * t * u[i], q, th);
        r *= ratio(num, den, "recursion coefficient");
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Rational x = u[i] / u[j];
            Rational num = poch_int(q * x / t, q, theta[i]) * poch_int(qpow(q, -theta[j]) * t * x, q, theta[i]);
            Rational den = poch_int(q * x, q, theta[i]) * poch_int(qpow(q, -theta[j]) * x, q, theta[i]);
            r *= ratio(num, den, "recursion coefficient");
        }
    if (r == 0) return 0;
    std::vector<Rational> x(n);
    for (int i = 0; i < n; ++i) x[i] = qpow(q, theta[i]) * u[i];
    Rational vdm = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) vdm *= x[i] - x[j];
    if (vdm == 0) throw SingularError("coincident nodes in recursion coefficient");
    Matrix m(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i) {
        // rows with theta_i = 0 reduce to pure powers
        Rational f = 0;
        if (theta[i] != 0) {
            f = ratio(1 - t * x[i], 1 - x[i], "recursion coefficient");
            for (int s = 0; s < n; ++s) f *= ratio(u[s] - x[i], t * u[s] - x[i], "recursion coefficient");
        }
        for (int j = 0; j < n; ++j) m[i][j] = qpow(x[i], n - 1 - j) * (1 - qpow(t, j) * f);
    }
    return r * det(m) / vdm;
}

Rational recursion_coeff_one(int theta, const Rational& u, const QtPoint& pt) {
    const Rational& q = pt.q;
    const Rational& t = pt.t;
    if (theta == 0) return 1;
    Rational num = qpow(t, theta) * poch_int(1 / t, q, theta) * poch_int(u * q, q, theta - 1) *
                   (1 - qpow(q, 2 * theta) * u);
    Rational den = poch_int(q, q, theta) * poch_int(q * t * u, q, theta);
    return ratio(num, den, "recursion coefficient");
}

std::vector<Rational> pieri_u(const Partition& lambda, int m, int n, const QtPoint& pt) {
    auto l = lambda.padded(n);
    std::vector<Rational> u(n);
    for (int i = 0; i < n; ++i) u[i] = qpow(pt.q, l[i] - m) * qpow(pt.t, n - 1 - i);
    return u;
}

std::vector<PieriTerm> pieri_terms(const Partition& lambda, int m, int n, const QtPoint& pt) {
    auto l = lambda.padded(n);
    auto u = pieri_u(lambda, m, n, pt);
    std::vector<PieriTerm> out;
    for (const auto& th : compositions_upto(n, m)) {
        std::vector<int> idx(n + 1);
        for (int i = 0; i < n; ++i) idx[i] = l[i] + th[i];
        idx[n] = m - total(th);
        if (!Partition::is_partition(idx)) continue;
        Rational c = pieri_coeff(th, u, pt);
        if (c == 0) continue;
        out.push_back({th, c, Partition(idx)});
    }
    return out;
}

PExp pieri_expand_p(const Partition& lambda, int m, int n, const QtPoint& pt) {
    PExp f;
    for (const auto& term : pieri_terms(lambda, m, n, pt))
        f = p_add(f, macdonald_Q_p(term.index, pt), term.coeff);
    return f;
}

SymPoly pieri_expand(const Partition& lambda, int m, int n, int nvars, const QtPoint& pt) {
    return restrict_to(pieri_expand_p(lambda, m, n, pt), nvars);
}

namespace {

std::mutex memo_mutex;
std::map<std::string, PExp> rec_memo;
std::map<std::string, PExp> dual_memo;

std::string memo_key(const Partition& lambda, const QtPoint& pt) {
    return lambda.str() + "|" + to_string(pt.q) + "|" + to_string(pt.t);
}

}  // namespace

PExp recursion_Q_p(const Partition& lambda, const QtPoint& pt) {
    if (lambda.length() == 0) return p_one();
    if (lambda.length() == 1) return g_k_p(lambda[0], pt);
    std::string key = memo_key(lambda, pt);
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = rec_memo.find(key);
        if (it != rec_memo.end()) return it->second;
    }
    const auto& l = lambda.parts();
    int n = lambda.length() - 1;
    std::vector<Rational> u(n);
    for (int i = 0; i < n; ++i) u[i] = qpow(pt.q, l[i] - l[n]) * qpow(pt.t, n - 1 - i);
    PExp f;
    for (const auto& th : compositions_upto(n, l[n])) {
        std::vector<int> inner(n);
        for (int i = 0; i < n; ++i) inner[i] = l[i] + th[i];
        if (!Partition::is_partition(inner)) continue;
        Rational c = recursion_coeff(th, u, pt);
        if (c == 0) continue;
        PExp term = p_mul(g_k_p(l[n] - total(th), pt), recursion_Q_p(Partition(inner), pt));
        f = p_add(f, term, c);
    }
    std::lock_guard<std::mutex> lock(memo_mutex);
    rec_memo.emplace(key, f);
    return f;
}

SymPoly recursion_Q(const Partition& lambda, int nvars, const QtPoint& pt) {
    return restrict_to(recursion_Q_p(lambda, pt), nvars);
}

PExp pieri_product_Q_p(const Partition& lambda, const QtPoint& pt) {
    if (lambda.length() <= 1) return lambda.length() == 0 ? p_one() : g_k_p(lambda[0], pt);
    int n = lambda.length() - 1;
    int m = lambda[n];
    Partition mu(std::vector<int>(lambda.parts().begin(), lambda.parts().begin() + n));
    PExp f = p_mul(pieri_product_Q_p(mu, pt), g_k_p(m, pt));
    Rational lead = 0;
    for (const auto& term : pieri_terms(mu, m, n, pt)) {
        if (term.index == lambda) {
            lead = term.coeff;
            continue;
        }
        f = p_add(f, pieri_product_Q_p(term.index, pt), -term.coeff);
    }
    if (lead == 0) throw PoleError("vanishing leading Pieri coefficient");
    return p_scale(f, 1 / lead);
}

SymPoly pieri_product_Q(const Partition& lambda, int nvars, const QtPoint& pt) {
    return restrict_to(pieri_product_Q_p(lambda, pt), nvars);
}

PExp dual_recursion_P_p(const Partition& lambda, const QtPoint& pt) {
    if (lambda.length() == 0) return p_one();
    int N = lambda[0];
    int n = N - 1;
    if (n == 0) return e_k_p(lambda.length());
    std::string key = memo_key(lambda, pt);
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = dual_memo.find(key);
        if (it != dual_memo.end()) return it->second;
    }
    std::vector<int> mult(N);
    for (int i = 0; i < N; ++i) mult[i] = lambda.multiplicity(i + 1);
    std::vector<Rational> u(n);
    for (int i = 0; i < n; ++i) {
        int s = 0;
        for (int j = i; j < n; ++j) s += mult[j];
        u[i] = qpow(pt.q, n - 1 - i) * qpow(pt.t, s);
    }
    QtPoint swapped = pt;
    std::swap(swapped.q, swapped.t);
    PExp f;
    for (const auto& th : compositions_upto(n, mult[n])) {
        std::vector<int> nm(n);
        for (int i = 0; i + 1 < n; ++i) nm[i] = mult[i] + th[i] - th[i + 1];
        nm[n - 1] = mult[n - 1] + mult[n] + th[n - 1];
        bool ok = true;
        for (int x : nm)
            if (x < 0) ok = false;
        if (!ok) continue;
        Rational c = recursion_coeff(th, u, swapped);
        if (c == 0) continue;
        std::vector<int> parts;
        for (int i = n - 1; i >= 0; --i)
            for (int k = 0; k < nm[i]; ++k) parts.push_back(i + 1);
        PExp term = p_mul(e_k_p(mult[n] - total(th)), dual_recursion_P_p(Partition(parts), pt));
        f = p_add(f, term, c);
    }
    std::lock_guard<std::mutex> lock(memo_mutex);
    dual_memo.emplace(key, f);
    return f;
}

SymPoly dual_recursion_P(const Partition& lambda, int nvars, const QtPoint& pt) {
    return restrict_to(dual_recursion_P_p(lambda, pt), nvars);
}

SymPoly restricted_pieri(const Partition& lambda, int m, int n, const QtPoint& pt) {
    if (lambda.length() > n) throw LengthError("lambda longer than the variable count");
    SymPoly f(n);
    for (const auto& term : pieri_terms(lambda, m, n, pt)) {
        if (total(term.theta) != m) continue;
        f += restrict_to(macdonald_Q_p(term.index, pt), n) * term.coeff;
    }
    return f;
}

std::vector<std::pair<PieriTerm, SymPoly>> restricted_pieri_dropped(const Partition& lambda, int m, int n,
                                                                     const QtPoint& pt) {
    std::vector<std::pair<PieriTerm, SymPoly>> out;
    for (const auto& term : pieri_terms(lambda, m, n, pt)) {
        if (total(term.theta) == m) continue;
        out.emplace_back(term, restrict_to(macdonald_Q_p(term.index, pt), n) * term.coeff);
    }
    return out;
}

}  // namespace macd
