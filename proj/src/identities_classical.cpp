#include "identities.hpp"

namespace macd {
namespace detail {
namespace {

using V = std::vector<BigComplex>;

// ---- one-variable series ----

template <class T>
T qbinomial_term(const Vals<T>& p, const MultiIndex& k) {
    Prod<T> r(p.q);
    r.poch(p["a"], k[0]).ipoch(p.q, k[0]).mul(tpow(p["z"], k[0]));
    return r.value();
}

BigComplex qbinomial_rhs(const Vals<BigComplex>& p, const Rational& q) {
    return inf_ratio({p["a"] * p["z"]}, {p["z"]}, q);
}

template <class T>
T gauss_term(const Vals<T>& p, const MultiIndex& k) {
    const T &a = p["a"], &b = p["b"], &c = p["c"];
    Prod<T> r(p.q);
    r.pochs({a, b}, k[0]).ipochs({p.q, c}, k[0]).mul(tpow(tdiv(c, a * b), k[0]));
    return r.value();
}

BigComplex gauss_rhs(const Vals<BigComplex>& p, const Rational& q) {
    const auto &a = p["a"], &b = p["b"], &c = p["c"];
    return inf_ratio({c / a, c / b}, {c, c / (a * b)}, q);
}

template <class T>
T wp_factor(const T& a, const T& q, long k) {
    return tdiv(T(1) - a * tpow(q, 2 * k), T(1) - a);
}

template <class T>
T six_term_t(const Vals<T>& p, const MultiIndex& k) {
    const T &a = p["a"], &b = p["b"], &c = p["c"], &q = p.q;
    T d = p.s.count("d") ? p["d"] : tpow(q, -p.M);
    Prod<T> r(q);
    r.mul(wp_factor(a, q, k[0]));
    r.pochs({a, b, c, d}, k[0]).ipochs({q, a * q / b, a * q / c, a * q / d}, k[0]);
    r.mul(tpow(tdiv(a * q, b * c * d), k[0]));
    return r.value();
}

Rational six_rhs(const IdParams& p) {
    const auto &a = p.at("a"), &b = p.at("b"), &c = p.at("c"), &q = p.q;
    Prod<Rational> r(q);
    r.pochs({a * q, a * q / (b * c)}, p.M).ipochs({a * q / b, a * q / c}, p.M);
    return r.value();
}

BigComplex six_nonterm_rhs(const Vals<BigComplex>& p, const Rational& q) {
    const auto &a = p["a"], &b = p["b"], &c = p["c"], &d = p["d"];
    BigComplex aq = a * BigComplex(q);
    return inf_ratio({aq, aq / (b * c), aq / (b * d), aq / (c * d)}, {aq / b, aq / c, aq / d, aq / (b * c * d)}, q);
}

template <class T>
T jackson_term(const Vals<T>& p, const MultiIndex& k) {
    const T &a = p["a"], &b = p["b"], &c = p["c"], &d = p["d"], &q = p.q;
    T qM = tpow(q, p.M);
    Prod<T> r(q);
    r.mul(wp_factor(a, q, k[0]));
    r.pochs({a, b, c, d, a * a * q * qM / (b * c * d), T(1) / qM}, k[0]);
    r.ipochs({q, a * q / b, a * q / c, a * q / d, b * c * d / (a * qM), a * q * qM}, k[0]);
    r.mul(tpow(q, k[0]));
    return r.value();
}

Rational jackson_rhs(const IdParams& p) {
    const auto &a = p.at("a"), &b = p.at("b"), &c = p.at("c"), &d = p.at("d"), &q = p.q;
    Prod<Rational> r(q);
    r.pochs({a * q, a * q / (b * c), a * q / (b * d), a * q / (c * d)}, p.M);
    r.ipochs({a * q / b, a * q / c, a * q / d, a * q / (b * c * d)}, p.M);
    return r.value();
}

// ---- A_{n-1} series ----

template <class T>
T milne_term(const Vals<T>& p, const MultiIndex& k) {
    const auto &a = p.vec("a"), &u = p.vec("u");
    int n = p.n;
    Prod<T> r(p.q);
    r.mul(vandermonde_ratio(u, k, p.q));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r.poch(a[j] * u[i] / u[j], k[i]).ipoch(p.q * u[i] / u[j], k[i]);
    return r.value();
}

Rational milne_rhs(const IdParams& p) {
    return poch_int(detail::product(p.vec("a")), p.q, p.M) / poch_int(p.q, p.q, p.M);
}

template <class T>
T an_qbinomial_term(const Vals<T>& p, const MultiIndex& k) {
    Prod<T> r(p.q);
    r.mul(milne_term(p, k)).mul(tpow(p["z"], total(k)));
    return r.value();
}

BigComplex an_qbinomial_rhs(const Vals<BigComplex>& p, const Rational& q) {
    return inf_ratio({detail::product(p.vec("a")) * p["z"]}, {p["z"]}, q);
}

template <class T>
T annt21_term(const Vals<T>& p, const MultiIndex& k) {
    const T &b = p["b"], &c = p["c"];
    T A = detail::product(p.vec("a"));
    int K = total(k);
    Prod<T> r(p.q);
    r.mul(milne_term(p, k)).poch(b, K).ipoch(c, K).mul(tpow(tdiv(c, A * b), K));
    return r.value();
}

BigComplex annt21_rhs(const Vals<BigComplex>& p, const Rational& q) {
    const auto &b = p["b"], &c = p["c"];
    BigComplex A = detail::product(p.vec("a"));
    return inf_ratio({c / A, c / b}, {c, c / (A * b)}, q);
}

// shared very-well-poised part of the A_{n-1} 6phi5 / 8phi7 summands
template <class T>
void an_wp_part(Prod<T>& r, const Vals<T>& p, const MultiIndex& k) {
    const T& a = p["a"];
    const auto &c = p.vec("c"), &u = p.vec("u");
    const T& q = p.q;
    int n = p.n, K = total(k);
    r.mul(vandermonde_ratio(u, k, q));
    for (int i = 0; i < n; ++i) {
        r.mul(tdiv(T(1) - a * u[i] * tpow(q, k[i] + K), T(1) - a * u[i]));
        r.poch(a * u[i], K).ipoch(a * u[i] * q / c[i], K);
        for (int j = 0; j < n; ++j) r.poch(c[j] * u[i] / u[j], k[i]).ipoch(q * u[i] / u[j], k[i]);
    }
}

template <class T>
T an65_term(const Vals<T>& p, const MultiIndex& k) {
    const T &a = p["a"], &b = p["b"], &q = p.q;
    const auto& u = p.vec("u");
    T C = detail::product(p.vec("c"));
    T d = p.s.count("d") ? p["d"] : tpow(q, -p.M);
    int K = total(k);
    Prod<T> r(q);
    an_wp_part(r, p, k);
    for (int i = 0; i < p.n; ++i) r.poch(b * u[i], k[i]).ipoch(a * u[i] * q / d, k[i]);
    r.poch(d, K).ipoch(a * q / b, K).mul(tpow(tdiv(a * q, b * C * d), K));
    return r.value();
}

Rational an65_rhs(const IdParams& p) {
    const auto &a = p.at("a"), &b = p.at("b"), &q = p.q;
    const auto &c = p.vec("c"), &u = p.vec("u");
    Rational C = detail::product(c);
    Prod<Rational> r(q);
    r.poch(a * q / (b * C), p.M).ipoch(a * q / b, p.M);
    for (int i = 0; i < p.n; ++i) r.poch(a * u[i] * q, p.M).ipoch(a * u[i] * q / c[i], p.M);
    return r.value();
}

BigComplex annt65_rhs(const Vals<BigComplex>& p, const Rational& qr) {
    const auto &a = p["a"], &b = p["b"], &d = p["d"];
    const auto &c = p.vec("c"), &u = p.vec("u");
    BigComplex q(qr), C = detail::product(c);
    V num{a * q / (b * C), a * q / (b * d)}, den{a * q / b, a * q / (b * C * d)};
    for (int i = 0; i < p.n; ++i) {
        num.push_back(a * u[i] * q);
        num.push_back(a * u[i] * q / (c[i] * d));
        den.push_back(a * u[i] * q / c[i]);
        den.push_back(a * u[i] * q / d);
    }
    return inf_ratio(num, den, qr);
}

template <class T>
T an87_term(const Vals<T>& p, const MultiIndex& k) {
    const T &a = p["a"], &b = p["b"], &d = p["d"], &q = p.q;
    const auto& u = p.vec("u");
    T C = detail::product(p.vec("c"));
    T qM = tpow(q, p.M);
    int K = total(k);
    Prod<T> r(q);
    an_wp_part(r, p, k);
    for (int i = 0; i < p.n; ++i) {
        r.pochs({b * u[i], a * a * u[i] * q * qM / (b * C * d)}, k[i]);
        r.ipochs({a * u[i] * q / d, a * u[i] * q * qM}, k[i]);
    }
    r.pochs({d, T(1) / qM}, K).ipochs({a * q / b, b * C * d / (a * qM)}, K).mul(tpow(q, K));
    return r.value();
}

Rational an87_rhs(const IdParams& p) {
    const auto &a = p.at("a"), &b = p.at("b"), &d = p.at("d"), &q = p.q;
    const auto &c = p.vec("c"), &u = p.vec("u");
    Rational C = detail::product(c);
    int M = p.M;
    Prod<Rational> r(q);
    r.pochs({a * q / (b * d), a * q / (b * C)}, M).ipochs({a * q / b, a * q / (b * C * d)}, M);
    for (int i = 0; i < p.n; ++i) {
        r.pochs({a * u[i] * q, a * u[i] * q / (c[i] * d)}, M);
        r.ipochs({a * u[i] * q / c[i], a * u[i] * q / d}, M);
    }
    return r.value();
}

// ---- C_n series ----

template <class T>
T cn87_term(const Vals<T>& p, const MultiIndex& k) {
    const T &a = p["a"], &b = p["b"], &c = p["c"], &d = p["d"], &q = p.q;
    const auto& u = p.vec("u");
    const auto& m = p.m;
    int n = p.n, Mm = 0;
    for (int x : m) Mm += x;
    T qM = tpow(q, Mm);
    Prod<T> r(q);
    r.mul(vandermonde_ratio(u, k, q));
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j)
            r.mul(tdiv(T(1) - a * u[i] * u[j] * tpow(q, k[i] + k[j]), T(1) - a * u[i] * u[j]));
        for (int j = 0; j < n; ++j) {
            r.pochs({tpow(q, -m[j]) * u[i] / u[j], a * u[i] * u[j]}, k[i]);
            r.ipochs({a * u[i] * u[j] * tpow(q, 1 + m[j]), q * u[i] / u[j]}, k[i]);
        }
        r.pochs({b * u[i], c * u[i], d * u[i], a * a * u[i] * q * qM / (b * c * d)}, k[i]);
        r.ipochs({a * u[i] * q / b, a * u[i] * q / c, a * u[i] * q / d, b * c * d * u[i] / (a * qM)}, k[i]);
    }
    r.mul(tpow(q, total(k)));
    return r.value();
}

Rational cn87_rhs(const IdParams& p) {
    const auto &a = p.at("a"), &b = p.at("b"), &c = p.at("c"), &d = p.at("d"), &q = p.q;
    const auto& u = p.vec("u");
    const auto& m = p.m;
    int n = p.n, Mm = 0;
    for (int x : m) Mm += x;
    Prod<Rational> r(q);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) r.ipoch(a * u[i] * u[j] * q, m[i] + m[j]);
        for (int j = 0; j < n; ++j) r.poch(a * u[i] * u[j] * q, m[i]);
    }
    r.pochs({a * q / (b * c), a * q / (b * d), a * q / (c * d)}, Mm);
    for (int i = 0; i < n; ++i)
        r.ipochs({a * u[i] * q / b, a * u[i] * q / c, a * u[i] * q / d, a * qpow(q, 1 + Mm - m[i]) / (b * c * d * u[i])},
                 m[i]);
    return r.value();
}

template <class F>
ExactTerm exact(F f) {
    return [f](const IdParams& p, const MultiIndex& k) { return f(vals<Rational>(p), k); };
}

NumericEval numeric(NumericTerm term, NumericRhs rhs) {
    return [term, rhs](const IdParams& p, const TruncationPolicy& pol) { return numeric_sum(p, pol, term, rhs); };
}

}  // namespace

void register_classical(std::vector<IdentitySpec>& reg) {
    {
        IdentitySpec s;
        s.id = "q-binomial";
        s.title = "q-binomial theorem";
        s.region = Region::orthant;
        s.terminating = false;
        s.multivariable = false;
        s.scalars = {"a", "z"};
        s.term = exact(qbinomial_term<Rational>);
        s.numeric = numeric(qbinomial_term<BigComplex>, qbinomial_rhs);
        s.argument = [](const IdParams& p) -> Rational { return p.at("z"); };
        reg.push_back(s);
    }
    {
        IdentitySpec s;
        s.id = "q-gauss";
        s.title = "q-Gauss 2phi1 summation";
        s.region = Region::orthant;
        s.terminating = false;
        s.multivariable = false;
        s.scalars = {"a", "b", "c"};
        s.term = exact(gauss_term<Rational>);
        s.numeric = numeric(gauss_term<BigComplex>, gauss_rhs);
        s.argument = [](const IdParams& p) -> Rational { return p.at("c") / (p.at("a") * p.at("b")); };
        reg.push_back(s);
    }
    {
        IdentitySpec s;
        s.id = "6phi5-term";
        s.title = "terminating very-well-poised 6phi5";
        s.region = Region::simplex;
        s.multivariable = false;
        s.scalars = {"a", "b", "c"};
        s.size = "M";
        s.term = exact(six_term_t<Rational>);
        s.rhs = six_rhs;
        reg.push_back(s);
    }
    {
        IdentitySpec s;
        s.id = "6phi5-nonterm";
        s.title = "nonterminating very-well-poised 6phi5";
        s.region = Region::orthant;
        s.terminating = false;
        s.multivariable = false;
        s.scalars = {"a", "b", "c", "d"};
        s.term = exact(six_term_t<Rational>);
        s.numeric = numeric(six_term_t<BigComplex>, six_nonterm_rhs);
        s.argument = [](const IdParams& p) -> Rational { return p.at("a") * p.q / (p.at("b") * p.at("c") * p.at("d")); };
        reg.push_back(s);
    }
    {
        IdentitySpec s;
        s.id = "8phi7-jackson";
        s.title = "Jackson's terminating 8phi7";
        s.region = Region::simplex;
        s.multivariable = false;
        s.scalars = {"a", "b", "c", "d"};
        s.size = "M";
        s.term = exact(jackson_term<Rational>);
        s.rhs = jackson_rhs;
        reg.push_back(s);
    }
    {
        IdentitySpec s;
        s.id = "milne-fundamental";
        s.title = "A_{n-1} sum over |k| = M";
        s.region = Region::shell;
        s.vectors = {"a", "u"};
        s.size = "M";
        s.term = exact(milne_term<Rational>);
        s.rhs = milne_rhs;
        reg.push_back(s);
    }
    {
        IdentitySpec s;
        s.id = "an-qbinomial";
        s.title = "A_{n-1} nonterminating q-binomial theorem";
        s.region = Region::orthant;
        s.terminating = false;
        s.scalars = {"z"};
        s.vectors = {"a", "u"};
        s.term = exact(an_qbinomial_term<Rational>);
        s.numeric = numeric(an_qbinomial_term<BigComplex>, an_qbinomial_rhs);
        s.argument = [](const IdParams& p) -> Rational { return p.at("z"); };
        reg.push_back(s);
    }
    {
        IdentitySpec s;
        s.id = "an65";
        s.title = "A_{n-1} terminating 6phi5";
        s.region = Region::simplex;
        s.scalars = {"a", "b"};
        s.vectors = {"c", "u"};
        s.size = "M";
        s.term = exact(an65_term<Rational>);
        s.rhs = an65_rhs;
        reg.push_back(s);
    }
    {
        IdentitySpec s;
        s.id = "annt65";
        s.title = "A_{n-1} nonterminating 6phi5";
        s.region = Region::orthant;
        s.terminating = false;
        s.scalars = {"a", "b", "d"};
        s.vectors = {"c", "u"};
        s.term = exact(an65_term<Rational>);
        s.numeric = numeric(an65_term<BigComplex>, annt65_rhs);
        s.argument = [](const IdParams& p) -> Rational {
            return p.at("a") * p.q / (p.at("b") * detail::product(p.vec("c")) * p.at("d"));
        };
        reg.push_back(s);
    }
    {
        IdentitySpec s;
        s.id = "annt21";
        s.title = "A_{n-1} nonterminating 2phi1";
        s.region = Region::orthant;
        s.terminating = false;
        s.scalars = {"b", "c"};
        s.vectors = {"a", "u"};
        s.term = exact(annt21_term<Rational>);
        s.numeric = numeric(annt21_term<BigComplex>, annt21_rhs);
        s.argument = [](const IdParams& p) -> Rational { return p.at("c") / (detail::product(p.vec("a")) * p.at("b")); };
        reg.push_back(s);
    }
    {
        IdentitySpec s;
        s.id = "an87";
        s.title = "A_{n-1} terminating 8phi7";
        s.region = Region::simplex;
        s.scalars = {"a", "b", "d"};
        s.vectors = {"c", "u"};
        s.size = "M";
        s.term = exact(an87_term<Rational>);
        s.rhs = an87_rhs;
        reg.push_back(s);
    }
    {
        IdentitySpec s;
        s.id = "cn87";
        s.title = "C_n terminating 8phi7";
        s.region = Region::box;
        s.scalars = {"a", "b", "c", "d"};
        s.vectors = {"u"};
        s.size = "m";
        s.term = exact(cn87_term<Rational>);
        s.rhs = cn87_rhs;
        reg.push_back(s);
    }
}

}  // namespace detail

namespace ids {

ExactPair six_phi_five(const Rational& a, const Rational& b, const Rational& c, int M, const Rational& q) {
    IdParams p;
    p.q = q;
    p.s = {{"a", a}, {"b", b}, {"c", c}};
    p.M = M;
    return eval_terminating(find_identity("6phi5-term"), p);
}

ExactPair jackson(const Rational& a, const Rational& b, const Rational& c, const Rational& d, int M,
                  const Rational& q) {
    IdParams p;
    p.q = q;
    p.s = {{"a", a}, {"b", b}, {"c", c}, {"d", d}};
    p.M = M;
    return eval_terminating(find_identity("8phi7-jackson"), p);
}

}  // namespace ids
}  // namespace macd
