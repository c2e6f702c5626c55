#include "identities.hpp"
#include "macd/macdrec.hpp"
#include "macd/partitions.hpp"
#include "macd/symfun.hpp"

namespace macd {
namespace {

using detail::Prod;

Rational poch(const Rational& a, const Rational& q, long k) { return poch_int(a, q, k); }

void check_lambda(const std::vector<int>& lam) {
    if (lam.size() < 2) throw LengthError("specialized display needs at least two parts");
    if (!Partition::is_partition(lam)) throw SupportError("specialized display needs a partition");
}

Rational pieri_spec_term(const std::vector<int>& l, const Rational& u, const Rational& q, const Rational& t,
                         const MultiIndex& th) {
    int n = static_cast<int>(l.size()) - 1, K = total(th);
    Prod<Rational> r(q);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j)
            r.mul(qpow(q, l[i] + th[i]) * qpow(t, -i - 1) - qpow(q, l[j] + th[j]) * qpow(t, -j - 1))
                .div(qpow(q, l[i]) * qpow(t, -i - 1) - qpow(q, l[j]) * qpow(t, -j - 1));
        r.mul(1 - qpow(q, l[i] - l[n] + th[i] + K) * qpow(t, n - i)).div(1 - qpow(q, l[i] - l[n]) * qpow(t, n - i));
        for (int j = 0; j < n; ++j)
            r.poch(qpow(q, l[i] - l[j]) * qpow(t, j - i + 1), th[i]).ipoch(qpow(q, 1 + l[i] - l[j]) * qpow(t, j - i), th[i]);
        r.poch(qpow(q, l[i] - l[n]) * qpow(t, n - i), K).ipoch(qpow(q, 1 + l[i] - l[n]) * qpow(t, n - i - 1), K);
        r.poch(qpow(q, l[i]) * u * qpow(t, -i), th[i]).ipoch(qpow(q, 1 + l[i]) * qpow(t, n - i), th[i]);
    }
    r.poch(qpow(q, -l[n]), K).ipoch(qpow(q, 1 - l[n]) * qpow(t, n) / u, K).mul(qpow(q / u, K));
    return r.value();
}

Rational pieri_spec_rhs(const std::vector<int>& l, const Rational& u, const Rational& q, const Rational& t) {
    int n = static_cast<int>(l.size()) - 1, L = l[n];
    Prod<Rational> r(q);
    r.poch(qpow(q, 1 - L) / u, L).ipoch(qpow(q, 1 - L) * qpow(t, n) / u, L);
    for (int i = 0; i < n; ++i)
        r.poch(qpow(q, 1 + l[i] - L) * qpow(t, n - i), L).ipoch(qpow(q, 1 + l[i] - L) * qpow(t, n - 1 - i), L);
    return r.value();
}

Rational rec_spec_term(const std::vector<int>& l, const Rational& u, const Rational& q, const Rational& t,
                       const MultiIndex& th) {
    int n = static_cast<int>(l.size()) - 1, K = total(th);
    Prod<Rational> r(q, true);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            r.poch(qpow(q, 1 + l[i] - l[j]) * qpow(t, j - i - 1), th[i]).ipoch(qpow(q, 1 + l[i] - l[j]) * qpow(t, j - i), th[i]);
        for (int j = i + 1; j < n; ++j) {
            r.poch(qpow(q, l[i] - l[j]) * qpow(t, j - i + 1), th[i] - th[j]);
            r.ipoch(qpow(q, 1 + l[i] - l[j]) * qpow(t, j - i - 1), th[i] - th[j]);
            r.div(qpow(q, l[i]) * qpow(t, -i - 1) - qpow(q, l[j]) * qpow(t, -j - 1));
        }
    }
    std::vector<std::vector<Rational>> mat(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i) {
        Rational x = qpow(q, l[i] + th[i]) * qpow(t, -i - 1);
        if (th[i] == 0) {
            for (int j = 0; j < n; ++j) mat[i][j] = qpow(x, n - 1 - j);
            continue;
        }
        Rational p = detail::tdiv(Rational(1 - qpow(q, l[i] - l[n] + th[i]) * qpow(t, n - i)),
                                  Rational(1 - qpow(q, l[i] - l[n] + th[i]) * qpow(t, n - i - 1)));
        for (int s = 0; s < n; ++s)
            p *= detail::tdiv(Rational(qpow(q, l[s]) * qpow(t, -s - 1) - x), Rational(qpow(q, l[s]) * qpow(t, -s) - x));
        for (int j = 0; j < n; ++j) mat[i][j] = qpow(x, n - 1 - j) * (1 - qpow(t, j) * p);
    }
    r.mul(detail::small_det(mat));
    long qe = 0, te = 0;
    for (int i = 0; i < n; ++i) {
        r.pochs({qpow(q, 1 + l[i] - l[n]) * qpow(t, n - i - 1), qpow(q, l[i]) * u * qpow(t, -i)}, th[i]);
        r.ipochs({qpow(q, 1 + l[i] - l[n]) * qpow(t, n - i), qpow(q, 1 + l[i]) * qpow(t, n - i - 1)}, th[i]);
        qe -= static_cast<long>(i) * th[i];
        te += 2L * i * th[i];
    }
    r.poch(qpow(q, -l[n]), K).ipoch(qpow(q, 1 - l[n]) / u, K).mul(qpow(q * t / u, K));
    r.mul(qpow(q, qe)).mul(qpow(t, te));
    return r.value();
}

Rational rec_spec_rhs(const std::vector<int>& l, const Rational& u, const Rational& q, const Rational& t) {
    int n = static_cast<int>(l.size()) - 1, L = l[n];
    Prod<Rational> r(q);
    r.poch(qpow(q, 1 - L) * qpow(t, n) / u, L).ipoch(qpow(q, 1 - L) / u, L);
    for (int i = 0; i < n; ++i)
        r.poch(qpow(q, 1 + l[i] - L) * qpow(t, n - 1 - i), L).ipoch(qpow(q, 1 + l[i] - L) * qpow(t, n - i), L);
    return r.value();
}

// normalizations relating the specialized Pieri / recursion expansions to the displays
Rational pieri_norm(const std::vector<int>& l, const Rational& u, const Rational& q, const Rational& t) {
    int n = static_cast<int>(l.size()) - 1;
    long e = 0;
    for (int i = 0; i <= n; ++i) e += static_cast<long>(i) * l[i];
    Rational r = qpow(t, e) * poch(u * qpow(t, -n), q, l[n]) / poch(q, q, l[n]);
    for (int i = 0; i < n; ++i) {
        r *= poch(u * qpow(t, -i), q, l[i]) / poch(q * qpow(t, n - i), q, l[i]);
        r *= poch(q * qpow(t, n - i), q, l[i] - l[n]) / poch(q * qpow(t, n - 1 - i), q, l[i] - l[n]);
        for (int j = i + 1; j < n; ++j)
            r *= poch(q * qpow(t, j - i), q, l[i] - l[j]) / poch(q * qpow(t, j - i - 1), q, l[i] - l[j]);
    }
    return r;
}

Rational recursion_norm(const std::vector<int>& l, const Rational& u, const Rational& q, const Rational& t) {
    int n = static_cast<int>(l.size()) - 1;
    long e = 0;
    for (int i = 0; i < n; ++i) e += static_cast<long>(i) * l[i];
    Rational r = qpow(t, e) * poch(u, q, l[n]) / poch(q, q, l[n]);
    for (int i = 0; i < n; ++i) {
        r *= poch(u * qpow(t, -i), q, l[i]) / poch(q * qpow(t, n - 1 - i), q, l[i]);
        for (int j = i + 1; j < n; ++j)
            r *= poch(q * qpow(t, j - i), q, l[i] - l[j]) / poch(q * qpow(t, j - i - 1), q, l[i] - l[j]);
    }
    return r;
}

Rational eps_Q(const std::vector<int>& lam, const Rational& u, const QtPoint& pt) {
    return hyper_specialize(macdonald_Q_p(Partition(lam), pt), u, pt.t);
}

std::vector<int> lambda_of(const IdParams& p) { return p.m; }

}  // namespace

ExactPair pieri_specialized(const std::vector<int>& lam, const Rational& u, const Rational& q, const Rational& t) {
    check_lambda(lam);
    int n = static_cast<int>(lam.size()) - 1;
    ExactPair r;
    for (const auto& th : compositions_upto(n, lam[n])) r.lhs += pieri_spec_term(lam, u, q, t, th);
    r.rhs = pieri_spec_rhs(lam, u, q, t);
    return r;
}

ExactPair recursion_specialized(const std::vector<int>& lam, const Rational& u, const Rational& q,
                                const Rational& t) {
    check_lambda(lam);
    int n = static_cast<int>(lam.size()) - 1;
    ExactPair r;
    for (const auto& th : compositions_upto(n, lam[n])) r.lhs += rec_spec_term(lam, u, q, t, th);
    r.rhs = rec_spec_rhs(lam, u, q, t);
    return r;
}

IdParams pieri_as_an65(const std::vector<int>& lam, const Rational& u, const Rational& q, const Rational& t) {
    check_lambda(lam);
    int n = static_cast<int>(lam.size()) - 1, L = lam[n];
    IdParams p;
    p.q = q;
    p.n = n;
    p.M = L;
    p.s = {{"a", t}, {"b", qpow(q, L) * u * qpow(t, 1 - n)}};
    std::vector<Rational> us, cs(n, t);
    for (int i = 0; i < n; ++i) us.push_back(qpow(q, lam[i] - L) * qpow(t, n - 1 - i));
    p.v = {{"c", cs}, {"u", us}};
    return p;
}

IdParams recursion_as_an65n(const std::vector<int>& lam, const Rational& u, const Rational& q, const Rational& t) {
    IdParams p = pieri_as_an65(lam, u, q, t);
    p.s = {{"t0", t}, {"b", p.s.at("b")}};
    p.v = {{"t", p.v.at("c")}, {"u", p.v.at("u")}};
    return p;
}

bool BridgeCheck::all() const {
    return pieri_sum && pieri_lhs && pieri_rhs && recursion_sum && recursion_lhs && recursion_rhs &&
           pieri_registered && recursion_registered;
}

BridgeCheck bridge_check(const std::vector<int>& lam, const Rational& u, const Rational& q, const Rational& t) {
    check_lambda(lam);
    int n = static_cast<int>(lam.size()) - 1, L = lam[n];
    QtPoint pt;
    pt.q = q;
    pt.t = t;
    std::vector<int> head(lam.begin(), lam.begin() + n);
    auto uu = pieri_u(Partition(head), L, n, pt);

    BridgeCheck r;
    Rational A = eps_Q(head, u, pt) * eps_Q({L}, u, pt), B = 0;
    Rational C = eps_Q(lam, u, pt), D = 0;
    for (const auto& th : compositions_upto(n, L)) {
        std::vector<int> idx(n + 1);
        for (int i = 0; i < n; ++i) idx[i] = lam[i] + th[i];
        idx[n] = L - total(th);
        if (Partition::is_partition(idx)) B += pieri_coeff(th, uu, pt) * eps_Q(idx, u, pt);
        idx.pop_back();
        if (Partition::is_partition(idx))
            D += recursion_coeff(th, uu, pt) * eps_Q({L - total(th)}, u, pt) * eps_Q(idx, u, pt);
    }
    auto P = pieri_specialized(lam, u, q, t);
    auto R = recursion_specialized(lam, u, q, t);
    Rational nP = pieri_norm(lam, u, q, t), nR = recursion_norm(lam, u, q, t);
    r.pieri_sum = A == B;
    r.pieri_lhs = nP != 0 && B / nP == P.lhs;
    r.pieri_rhs = nP != 0 && A / nP == P.rhs;
    r.recursion_sum = C == D;
    r.recursion_lhs = nR != 0 && D / nR == R.lhs;
    r.recursion_rhs = nR != 0 && C / nR == R.rhs;
    auto a65 = eval_terminating(find_identity("an65"), pieri_as_an65(lam, u, q, t));
    auto a65n = eval_terminating(find_identity("an65n-new"), recursion_as_an65n(lam, u, q, t));
    r.pieri_registered = a65.lhs == P.lhs && a65.rhs == P.rhs;
    r.recursion_registered = a65n.lhs == R.lhs && a65n.rhs == R.rhs;
    return r;
}

namespace detail {

void register_specialized(std::vector<IdentitySpec>& reg) {
    {
        IdentitySpec s;
        s.id = "pieri-specialized";
        s.title = "hypergeometrically specialized Pieri formula";
        s.region = Region::partition_pieri;
        s.scalars = {"u", "t"};
        s.size = "lambda";
        s.term = [](const IdParams& p, const MultiIndex& th) {
            return pieri_spec_term(lambda_of(p), p.at("u"), p.q, p.at("t"), th);
        };
        s.rhs = [](const IdParams& p) { return pieri_spec_rhs(lambda_of(p), p.at("u"), p.q, p.at("t")); };
        reg.push_back(s);
    }
    {
        IdentitySpec s;
        s.id = "recursion-specialized";
        s.title = "hypergeometrically specialized recursion formula";
        s.region = Region::partition_pieri;
        s.scalars = {"u", "t"};
        s.size = "lambda";
        s.term = [](const IdParams& p, const MultiIndex& th) {
            return rec_spec_term(lambda_of(p), p.at("u"), p.q, p.at("t"), th);
        };
        s.rhs = [](const IdParams& p) { return rec_spec_rhs(lambda_of(p), p.at("u"), p.q, p.at("t")); };
        reg.push_back(s);
    }
}

}  // namespace detail
}  // namespace macd
