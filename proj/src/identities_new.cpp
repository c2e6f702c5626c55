#include "identities.hpp"

namespace macd {
namespace detail {
namespace {

using V = std::vector<BigComplex>;

int sum_of(const std::vector<int>& m) {
    int s = 0;
    for (int x : m) s += x;
    return s;
}

// Pochhammer quotients, Vandermonde denominators and the determinant shared
// by the A-type determinant sums
template <class T>
T determinant_part(const std::vector<T>& u, const MultiIndex& k, const T& q, const std::vector<T>& t, const T& t0) {
    int n = static_cast<int>(u.size());
    Prod<T> r(q);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) r.poch(q * u[i] / (t[i] * u[j]), k[i]).ipoch(q * u[i] / u[j], k[i]);
        for (int j = i + 1; j < n; ++j) {
            r.poch(t[j] * u[i] / u[j], k[i] - k[j]).ipoch(q * u[i] / (t[i] * u[j]), k[i] - k[j]);
            r.div(u[i] - u[j]);
        }
    }
    std::vector<std::vector<T>> mat(n, std::vector<T>(n));
    for (int i = 0; i < n; ++i) {
        T x = u[i] * tpow(q, k[i]);
        if (k[i] == 0) {
            for (int j = 0; j < n; ++j) mat[i][j] = tpow(x, n - 1 - j);
            continue;
        }
        T f = tdiv(T(1) - t0 * x, T(1) - t0 * x / t[i]);
        for (int s = 0; s < n; ++s) f *= tdiv(x - u[s], x / t[i] - u[s]);
        for (int j = 0; j < n; ++j) mat[i][j] = tpow(x, n - 1 - j) * (T(1) - tpow(t[i], j - n) * f);
    }
    r.mul(small_det(mat));
    return r.value();
}

template <class T>
T an87n_term(const Vals<T>& p, const MultiIndex& k) {
    const T &b = p["b"], &d = p["d"], &t0 = p["t0"], &q = p.q;
    const auto &t = p.vec("t"), &u = p.vec("u");
    T Tt = detail::product(t);
    T qM = tpow(q, p.M);
    int n = p.n, K = total(k);
    Prod<T> r(q);
    r.mul(determinant_part(u, k, q, t, t0));
    r.pochs({d, T(1) / qM}, K).ipochs({b * d / (qM * t0), t0 * q / (b * Tt)}, K);
    long e = K;
    for (int i = 0; i < n; ++i) {
        r.pochs({t0 * u[i] * q / t[i], b * u[i], t0 * t0 * u[i] * q * qM / (b * d * Tt)}, k[i]);
        r.ipochs({t0 * u[i] * q, t0 * u[i] * q / (d * t[i]), t0 * u[i] * q * qM / t[i]}, k[i]);
        r.poch(d / (qM * t0 * u[i]), K - k[i]).ipoch(d * t[i] / (qM * t0 * u[i]), K - k[i]);
        e -= static_cast<long>(i) * k[i];
        long te = static_cast<long>(i) * k[i];
        for (int j = i + 1; j < n; ++j) te += k[j];
        r.mul(tpow(t[i], te));
    }
    r.mul(tpow(q, e));
    return r.value();
}

Rational an87n_rhs(const IdParams& p) {
    const auto &b = p.at("b"), &d = p.at("d"), &t0 = p.at("t0"), &q = p.q;
    const auto &t = p.vec("t"), &u = p.vec("u");
    Rational T = detail::product(t);
    int M = p.M;
    Prod<Rational> r(q);
    r.pochs({t0 * q / b, t0 * q / (b * d * T)}, M).ipochs({t0 * q / (b * d), t0 * q / (b * T)}, M);
    for (int i = 0; i < p.n; ++i) {
        r.pochs({t0 * u[i] * q / t[i], t0 * u[i] * q / d}, M);
        r.ipochs({t0 * u[i] * q, t0 * u[i] * q / (d * t[i])}, M);
    }
    return r.value();
}

// determinant 6phi5; d = q^{-M} gives the terminating form
template <class T>
T an65n_term(const Vals<T>& p, const MultiIndex& k) {
    const T &b = p["b"], &t0 = p["t0"], &q = p.q;
    const auto &t = p.vec("t"), &u = p.vec("u");
    T d = p.s.count("d") ? p["d"] : tpow(q, -p.M);
    T Tt = detail::product(t);
    int n = p.n, K = total(k);
    Prod<T> r(q);
    r.mul(determinant_part(u, k, q, t, t0));
    long e = 0, partial = 0;
    for (int i = 0; i < n; ++i) {
        r.pochs({t0 * u[i] * q / t[i], b * u[i]}, k[i]).ipochs({t0 * u[i] * q, t0 * u[i] * q / (d * t[i])}, k[i]);
        partial += k[i];
        r.mul(tpow(t[i], static_cast<long>(i + 1) * k[i] - partial));
        e -= static_cast<long>(i) * k[i];
    }
    r.mul(tpow(q, e));
    r.poch(d, K).ipoch(t0 * q / (b * Tt), K).mul(tpow(tdiv(t0 * q, b * d), K));
    return r.value();
}

Rational an65n_rhs(const IdParams& p) {
    const auto &b = p.at("b"), &t0 = p.at("t0"), &q = p.q;
    const auto &t = p.vec("t"), &u = p.vec("u");
    Rational T = detail::product(t);
    Prod<Rational> r(q);
    r.poch(t0 * q / b, p.M).ipoch(t0 * q / (b * T), p.M);
    for (int i = 0; i < p.n; ++i) r.poch(t0 * u[i] * q / t[i], p.M).ipoch(t0 * u[i] * q, p.M);
    return r.value();
}

BigComplex an65nt_rhs(const Vals<BigComplex>& p, const Rational& qr) {
    const auto &b = p["b"], &d = p["d"], &t0 = p["t0"];
    const auto &t = p.vec("t"), &u = p.vec("u");
    BigComplex q(qr), T = detail::product(t);
    V num{t0 * q / b, t0 * q / (b * d * T)}, den{t0 * q / (b * d), t0 * q / (b * T)};
    for (int i = 0; i < p.n; ++i) {
        num.push_back(t0 * u[i] * q / t[i]);
        num.push_back(t0 * u[i] * q / d);
        den.push_back(t0 * u[i] * q);
        den.push_back(t0 * u[i] * q / (d * t[i]));
    }
    return inf_ratio(num, den, qr);
}

// box 8phi7 with polynomial argument; the factor (1 - q^{k_i - m_i}) is moved
// from (q^{1-m_i})_{k_i} into row i of the determinant
template <class T>
T an87np_term(const Vals<T>& p, const MultiIndex& k) {
    const T &a = p["a"], &b = p["b"], &c = p["c"], &d = p["d"], &q = p.q;
    const auto& u = p.vec("u");
    const auto& m = p.m;
    int n = p.n, Mm = sum_of(m), K = total(k);
    Prod<T> r(q);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (j == i && k[i] > 0)
                r.poch(tpow(q, 1 - m[i]), k[i] - 1).ipoch(q, k[i]);
            else
                r.poch(tpow(q, 1 - m[i]) * u[i] / u[j], k[i]).ipoch(q * u[i] / u[j], k[i]);
        }
        for (int j = i + 1; j < n; ++j) {
            r.poch(tpow(q, m[j]) * u[i] / u[j], k[i] - k[j]).ipoch(tpow(q, 1 - m[i]) * u[i] / u[j], k[i] - k[j]);
            r.div(u[i] - u[j]);
        }
    }
    std::vector<std::vector<T>> mat(n, std::vector<T>(n));
    for (int i = 0; i < n; ++i) {
        T x = u[i] * tpow(q, k[i]);
        if (k[i] == 0) {
            for (int j = 0; j < n; ++j) mat[i][j] = tpow(x, n - 1 - j);
            continue;
        }
        T D = T(1) - tpow(q, k[i] - m[i]);
        T f = tdiv(T(1) - a * u[i] * tpow(q, k[i] + Mm), T(1) - a * u[i] * tpow(q, k[i] + Mm - m[i]));
        f *= T(0) - (x - u[i]) / u[i];
        for (int s = 0; s < n; ++s)
            if (s != i) f *= tdiv(x - u[s], u[i] * tpow(q, k[i] - m[i]) - u[s]);
        for (int j = 0; j < n; ++j)
            mat[i][j] = tpow(x, n - 1 - j) * (D - tpow(q, static_cast<long>(j - n) * m[i]) * f);
    }
    r.mul(small_det(mat));
    T qM = tpow(q, Mm);
    r.pochs({c, d}, K).ipochs({b * c * d / (a * qM), a * q / b}, K);
    long e = K;
    for (int i = 0; i < n; ++i) {
        T A = a * u[i] * tpow(q, 1 + Mm - m[i]);
        r.pochs({A, b * u[i], a * a * u[i] * q * qM / (b * c * d)}, k[i]);
        r.ipochs({a * u[i] * q * qM, A / c, A / d}, k[i]);
        r.poch(c * d / (qM * a * u[i]), K - k[i]).ipoch(c * d * tpow(q, m[i]) / (qM * a * u[i]), K - k[i]);
        long later = 0;
        for (int j = i + 1; j < n; ++j) later += k[j];
        e += -static_cast<long>(i) * k[i] + static_cast<long>(m[i]) * (static_cast<long>(i) * k[i] + later);
    }
    r.mul(tpow(q, e));
    return r.value();
}

Rational an87np_rhs(const IdParams& p) {
    const auto &a = p.at("a"), &b = p.at("b"), &c = p.at("c"), &d = p.at("d"), &q = p.q;
    const auto& u = p.vec("u");
    int Mm = sum_of(p.m);
    Prod<Rational> r(q);
    r.pochs({a * q / (b * c), a * q / (b * d)}, Mm).ipochs({a * q / b, a * q / (b * c * d)}, Mm);
    for (int i = 0; i < p.n; ++i) {
        Rational A = a * u[i] * qpow(q, 1 + Mm - p.m[i]);
        r.pochs({A, A / (c * d)}, p.m[i]).ipochs({A / c, A / d}, p.m[i]);
    }
    return r.value();
}

template <class T>
T cn87n_term_impl(const Vals<T>& p, const MultiIndex& k, bool literal) {
    const T &a = p["a"], &b = p["b"], &c = p["c"], &d = p["d"], &q = p.q;
    const auto& u = p.vec("u");
    const auto& m = p.m;
    int n = p.n, Mm = sum_of(m), K = total(k);
    T qM = tpow(q, Mm);
    Prod<T> r(q);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            T A = a * u[i] * u[j] * tpow(q, 1 + Mm - m[i]);
            if (j == i && k[i] > 0) {
                r.poch(tpow(q, 1 - m[i]), k[i] - 1).poch(A, k[i]);
                r.ipochs({q, a * u[i] * u[j] * q * qM}, k[i]);
            } else {
                r.pochs({tpow(q, 1 - m[i]) * u[i] / u[j], A}, k[i]);
                r.ipochs({q * u[i] / u[j], a * u[i] * u[j] * q * qM}, k[i]);
            }
            r.poch(tpow(q, m[j]) * u[i] / u[j], k[i] - k[j]).ipoch(q * u[i] / u[j], k[i] - k[j]);
        }
        for (int j = i + 1; j < n; ++j) {
            r.mul(tdiv(u[i] * tpow(q, k[i]) - u[j] * tpow(q, k[j]), u[i] - u[j]));
            r.poch(a * u[i] * u[j] * qM, k[i] + k[j]).ipoch(a * u[i] * u[j] * tpow(q, 1 + Mm - m[i] - m[j]), k[i] + k[j]);
            r.div(u[i] - u[j]).div(T(1) - T(1) / (qM * a * u[i] * u[j]));
        }
        r.div(u[i] + T(1) / (qM * a * u[i]));
    }
    long e = K;
    for (int i = 0; i < n; ++i) e += static_cast<long>(n - 1) * m[i] * k[i];
    r.mul(tpow(q, e));
    std::vector<std::vector<T>> mat(n, std::vector<T>(n));
    for (int i = 0; i < n; ++i) {
        int shift = literal ? m[i] : Mm;
        T X = u[i] * tpow(q, k[i]) + tpow(q, -k[i] - shift) / (a * u[i]);
        T Y = u[i] * tpow(q, k[i] - m[i]) + tpow(q, -k[i] + m[i] - Mm) / (a * u[i]);
        if (k[i] == 0) {
            for (int j = 0; j < n; ++j) mat[i][j] = tpow(X, n - j);
            continue;
        }
        T D = T(1) - tpow(q, k[i] - m[i]);
        T P = (T(1) - tpow(q, k[i])) * tdiv(T(1) - tpow(q, -k[i] - Mm) / (a * u[i] * u[i]),
                                             T(1) - tpow(q, -k[i] + m[i] - Mm) / (a * u[i] * u[i]));
        for (int s = 0; s < n; ++s) {
            if (s == i) continue;
            P *= tdiv((u[i] * tpow(q, k[i]) - u[s]) * (T(1) - tpow(q, -k[i] - Mm) / (a * u[i] * u[s])),
                      (u[i] * tpow(q, k[i] - m[i]) - u[s]) * (T(1) - tpow(q, -k[i] + m[i] - Mm) / (a * u[i] * u[s])));
        }
        for (int j = 0; j < n; ++j) mat[i][j] = D * tpow(X, n - j) - tpow(Y, n - j) * P;
    }
    r.mul(small_det(mat));
    for (int i = 0; i < n; ++i) {
        T A = a * u[i] * tpow(q, 1 + Mm - m[i]);
        r.pochs({b * u[i], c * u[i], d * u[i], a * a * u[i] * q * qM / (b * c * d)}, k[i]);
        r.ipochs({A / b, A / c, A / d, b * c * d * u[i] * tpow(q, -m[i]) / a}, k[i]);
    }
    return r.value();
}

template <class T>
T cn87n_term(const Vals<T>& p, const MultiIndex& k) {
    return cn87n_term_impl(p, k, false);
}

Rational cn87n_rhs(const IdParams& p) {
    const auto &a = p.at("a"), &b = p.at("b"), &c = p.at("c"), &d = p.at("d"), &q = p.q;
    const auto& u = p.vec("u");
    const auto& m = p.m;
    int n = p.n, Mm = sum_of(m);
    Prod<Rational> r(q);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) r.ipoch(a * u[i] * u[j] * qpow(q, 1 + Mm - m[i] - m[j]), m[i] + m[j]);
        for (int j = 0; j < n; ++j) r.poch(a * u[i] * u[j] * qpow(q, 1 + Mm - m[i]), m[i]);
    }
    r.pochs({a * q / (b * c), a * q / (b * d), a * q / (c * d)}, Mm);
    for (int i = 0; i < n; ++i) {
        Rational A = a * u[i] * qpow(q, 1 + Mm - m[i]);
        r.ipochs({A / b, A / c, A / d, a * q / (b * c * d * u[i])}, m[i]);
    }
    return r.value();
}

template <class F>
ExactTerm exact(F f) {
    return [f](const IdParams& p, const MultiIndex& k) { return f(vals<Rational>(p), k); };
}

}  // namespace

void register_new(std::vector<IdentitySpec>& reg) {
    {
        IdentitySpec s;
        s.id = "an87n";
        s.title = "multivariable terminating 8phi7 with determinant summand";
        s.region = Region::simplex;
        s.scalars = {"b", "d", "t0"};
        s.vectors = {"t", "u"};
        s.size = "M";
        s.term = exact(an87n_term<Rational>);
        s.rhs = an87n_rhs;
        reg.push_back(s);
    }
    {
        IdentitySpec s;
        s.id = "an87np";
        s.title = "multivariable terminating 8phi7, polynomial argument";
        s.region = Region::box;
        s.scalars = {"a", "b", "c", "d"};
        s.vectors = {"u"};
        s.size = "m";
        s.term = exact(an87np_term<Rational>);
        s.rhs = an87np_rhs;
        reg.push_back(s);
    }
    {
        IdentitySpec s;
        s.id = "an65nt-new";
        s.title = "multivariable nonterminating 6phi5 with determinant summand";
        s.region = Region::orthant;
        s.terminating = false;
        s.scalars = {"b", "d", "t0"};
        s.vectors = {"t", "u"};
        s.term = exact(an65n_term<Rational>);
        s.numeric = [](const IdParams& p, const TruncationPolicy& pol) {
            return numeric_sum(p, pol, an65n_term<BigComplex>, an65nt_rhs);
        };
        // the sum along the k_j axis decays like (t0 q t_j / (b d T))^{k_j}
        s.argument = [](const IdParams& p) -> Rational {
            Rational z = p.at("t0") * p.q / (p.at("b") * p.at("d"));
            Rational T = detail::product(p.vec("t")), worst = abs(z);
            for (const auto& tj : p.vec("t"))
                if (abs(z * tj / T) > worst) worst = abs(z * tj / T);
            return worst;
        };
        reg.push_back(s);
    }
    {
        IdentitySpec s;
        s.id = "an65n-new";
        s.title = "multivariable terminating 6phi5 with determinant summand";
        s.region = Region::simplex;
        s.scalars = {"b", "t0"};
        s.vectors = {"t", "u"};
        s.size = "M";
        s.term = exact(an65n_term<Rational>);
        s.rhs = an65n_rhs;
        reg.push_back(s);
    }
    {
        IdentitySpec s;
        s.id = "cn87n-conjecture";
        s.title = "multivariable terminating 8phi7 of C type (conjectured)";
        s.region = Region::box;
        s.scalars = {"a", "b", "c", "d"};
        s.vectors = {"u"};
        s.size = "m";
        s.term = exact(cn87n_term<Rational>);
        s.rhs = cn87n_rhs;
        reg.push_back(s);
    }
}

}  // namespace detail

namespace ids {

ExactPair cn87n_literal(const IdParams& p) {
    auto V = detail::vals<Rational>(p);
    ExactPair r;
    for (const auto& k : box(MultiIndex(p.n, 0), p.m)) r.lhs += detail::cn87n_term_impl(V, k, true);
    r.rhs = detail::cn87n_rhs(p);
    return r;
}

NumericPair an65nt_complex(const BigComplex& b, const BigComplex& d, const BigComplex& t0,
                           const std::vector<BigComplex>& t, const std::vector<BigComplex>& u, const Rational& q,
                           const TruncationPolicy& policy) {
    if (t.size() != u.size()) throw LengthError("t and u differ in length");
    detail::Vals<BigComplex> V;
    V.q = BigComplex(q);
    V.n = static_cast<int>(u.size());
    V.s = {{"b", b}, {"d", d}, {"t0", t0}};
    V.v = {{"t", t}, {"u", u}};
    NumericPair r;
    r.lhs = sum_shells(V.n, [&](const MultiIndex& k) { return detail::an65n_term(V, k); }, policy, &r.shells);
    r.rhs = detail::an65nt_rhs(V, q);
    return r;
}

}  // namespace ids
}  // namespace macd
