#include "macd/matinv.hpp"

#include <omp.h>

#include "macd/linalg.hpp"
#include "macd/macdrec.hpp"
#include "macd/random.hpp"

namespace macd {

const Rational& SequenceFamily::A(int i, int k) const {
    auto it = a.find({i, k});
    if (it == a.end()) throw SupportError("sequence a_" + std::to_string(i) + "(" + std::to_string(k) + ") undefined");
    return it->second;
}

const Rational& SequenceFamily::C(int i, int k) const {
    auto it = c.find({i, k});
    if (it == c.end()) throw SupportError("sequence c_" + std::to_string(i) + "(" + std::to_string(k) + ") undefined");
    return it->second;
}

SequenceFamily random_family(int n, int window, std::mt19937_64& rng) {
    SequenceFamily fam;
    for (int i = 0; i < n; ++i)
        for (int k = 0; k <= window; ++k) {
            fam.a[{i, k}] = draw_rational(rng);
            fam.c[{i, k}] = draw_rational(rng);
        }
    fam.b = draw_rational(rng);
    return fam;
}

namespace {

// exact product that rejects any vanishing denominator factor
class Strict {
public:
    Strict() : v_(1) {}
    explicit Strict(const Rational& v) : v_(v) {}
    Strict& mul(const Rational& x) {
        v_ *= x;
        return *this;
    }
    Strict& div(const Rational& x) {
        if (x == 0) throw PoleError("vanishing denominator factor");
        v_ /= x;
        return *this;
    }
    Strict& poch(const Rational& a, const Rational& q, long k) { return mul(poch_int(a, q, k)); }
    Strict& ipoch(const Rational& a, const Rational& q, long k) { return div(poch_int(a, q, k)); }
    Strict& pochs(const std::vector<Rational>& as, const Rational& q, long k) {
        for (const auto& a : as) poch(a, q, k);
        return *this;
    }
    Strict& ipochs(const std::vector<Rational>& as, const Rational& q, long k) {
        for (const auto& a : as) ipoch(a, q, k);
        return *this;
    }
    const Rational& value() const { return v_; }

private:
    Rational v_;
};

Rational inv(const Rational& x, const char* what) {
    if (x == 0) throw PoleError(what);
    return 1 / x;
}

}  // namespace

Rational general_f(const MultiIndex& m, const MultiIndex& k, const SequenceFamily& fam) {
    if (!geq(m, k)) return 0;
    int n = static_cast<int>(m.size());
    std::vector<Rational> ck(n);
    Rational pc = 1;
    for (int i = 0; i < n; ++i) {
        ck[i] = fam.C(i, k[i]);
        pc *= ck[i];
    }
    Rational bb = fam.b * inv(pc, "c_i(k_i) = 0");
    Rational r = 1;
    for (int i = 0; i < n; ++i) {
        r *= inv(ck[i], "c_i(k_i) = 0");
        for (int j = i + 1; j < n; ++j) r *= inv(ck[i] - ck[j], "c_i(k_i) = c_j(k_j)");
    }
    Matrix mx(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i) {
        const Rational& cm = fam.C(i, m[i]);
        const Rational& am = fam.A(i, m[i]);
        Strict p;
        p.mul(cm - bb).div(am - bb);
        for (int s = 0; s < n; ++s) p.mul(cm - ck[s]).div(am - ck[s]);
        Rational pv = p.value();
        for (int j = 0; j < n; ++j) mx[i][j] = qpow(cm, n - j) - qpow(am, n - j) * pv;
    }
    r *= det(mx);
    Strict z(r);
    for (int i = 0; i < n; ++i)
        for (int y = k[i] + 1; y <= m[i]; ++y) {
            const Rational& ay = fam.A(i, y);
            const Rational& cy = fam.C(i, y);
            z.mul(ay - bb).div(cy - bb);
            for (int j = 0; j < n; ++j) z.mul(ay - ck[j]).div(cy - ck[j]);
        }
    return z.value();
}

Rational general_g(const MultiIndex& k, const MultiIndex& l, const SequenceFamily& fam) {
    if (!geq(k, l)) return 0;
    int n = static_cast<int>(k.size());
    std::vector<Rational> ck(n);
    Rational pc = 1;
    for (int i = 0; i < n; ++i) {
        ck[i] = fam.C(i, k[i]);
        pc *= ck[i];
    }
    Rational bb = fam.b * inv(pc, "c_i(k_i) = 0");
    Strict z;
    for (int i = 0; i < n; ++i) {
        for (int y = l[i] + 1; y <= k[i]; ++y) {
            z.mul(fam.A(i, y) - bb);
            for (int j = 0; j < n; ++j) z.mul(fam.A(i, y) - ck[j]);
        }
        for (int y = l[i]; y < k[i]; ++y) {
            z.div(fam.C(i, y) - bb);
            for (int j = 0; j < n; ++j) z.div(fam.C(i, y) - ck[j]);
        }
    }
    return z.value();
}

Rational general_fC(const MultiIndex& m, const MultiIndex& k, const SequenceFamily& fam) {
    if (!geq(m, k)) return 0;
    int n = static_cast<int>(m.size());
    const Rational& b = fam.b;
    std::vector<Rational> ck(n);
    for (int i = 0; i < n; ++i) ck[i] = fam.C(i, k[i]);
    Rational r = 1;
    for (int i = 0; i < n; ++i) {
        r *= qpow(fam.C(i, m[i]), n) * inv(qpow(ck[i], n), "c_i(k_i) = 0");
        r *= inv(ck[i] + b / ck[i], "c + b/c = 0");
        for (int j = i + 1; j < n; ++j)
            r *= inv((1 - b / (ck[i] * ck[j])) * (ck[i] - ck[j]), "coincident c values");
    }
    Matrix mx(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i) {
        const Rational& cm = fam.C(i, m[i]);
        const Rational& am = fam.A(i, m[i]);
        Strict p;
        for (int s = 0; s < n; ++s) {
            p.mul(1 - b / (cm * ck[s])).mul(cm - ck[s]);
            p.div(1 - b / (am * ck[s])).div(am - ck[s]);
        }
        Rational pv = p.value();
        Rational cs = cm + b / cm, as = am + b / am;
        for (int j = 0; j < n; ++j) mx[i][j] = qpow(cs, n - j) - qpow(as, n - j) * pv;
    }
    r *= det(mx);
    Strict z(r);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int y = k[i] + 1; y <= m[i]; ++y) {
                const Rational& ay = fam.A(i, y);
                const Rational& cy = fam.C(i, y);
                z.mul(ay - b / ck[j]).mul(ay - ck[j]);
                z.div(cy - b / ck[j]).div(cy - ck[j]);
            }
    return z.value();
}

Rational general_gC(const MultiIndex& k, const MultiIndex& l, const SequenceFamily& fam) {
    if (!geq(k, l)) return 0;
    int n = static_cast<int>(k.size());
    const Rational& b = fam.b;
    std::vector<Rational> ck(n);
    for (int i = 0; i < n; ++i) ck[i] = fam.C(i, k[i]);
    Strict z;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (ck[j] == 0) throw PoleError("c_j(k_j) = 0");
            for (int y = l[i] + 1; y <= k[i]; ++y) z.mul(fam.A(i, y) - b / ck[j]).mul(fam.A(i, y) - ck[j]);
            for (int y = l[i]; y < k[i]; ++y) z.div(fam.C(i, y) - b / ck[j]).div(fam.C(i, y) - ck[j]);
        }
    return z.value();
}

Rational kr_f1(int m, int k, const SequenceFamily& fam) {
    if (m < k) return 0;
    const Rational& b = fam.b;
    auto a = [&](int y) { return fam.A(0, y); };
    auto c = [&](int y) { return fam.C(0, y); };
    Rational ck = c(k);
    if (ck == 0) throw PoleError("c_k = 0");
    Strict z;
    z.mul(b - a(m) * c(m)).mul(a(m) - c(m));
    z.div(b - a(k) * ck).div(a(k) - ck);
    for (int y = k; y < m; ++y) z.mul(a(y) - b / ck).mul(a(y) - ck);
    for (int y = k + 1; y <= m; ++y) z.div(c(y) - b / ck).div(c(y) - ck);
    return z.value();
}

Rational kr_g1(int k, int l, const SequenceFamily& fam) {
    if (k < l) return 0;
    const Rational& b = fam.b;
    Rational ck = fam.C(0, k);
    if (ck == 0) throw PoleError("c_k = 0");
    Strict z;
    for (int y = l + 1; y <= k; ++y) z.mul(fam.A(0, y) - b / ck).mul(fam.A(0, y) - ck);
    for (int y = l; y < k; ++y) z.div(fam.C(0, y) - b / ck).div(fam.C(0, y) - ck);
    return z.value();
}

Rational kr_f2(int m, int k, const SequenceFamily& fam) {
    if (m < k) return 0;
    Rational ck = fam.C(0, k);
    Strict z;
    for (int y = k; y < m; ++y) z.mul(fam.A(0, y) - ck);
    for (int y = k + 1; y <= m; ++y) z.div(fam.C(0, y) - ck);
    return z.value();
}

Rational kr_g2(int k, int l, const SequenceFamily& fam) {
    if (k < l) return 0;
    Rational ck = fam.C(0, k);
    Strict z;
    z.mul(fam.A(0, l) - fam.C(0, l)).div(fam.A(0, k) - ck);
    for (int y = l + 1; y <= k; ++y) z.mul(fam.A(0, y) - ck);
    for (int y = l; y < k; ++y) z.div(fam.C(0, y) - ck);
    return z.value();
}

SequenceFamily shifted_family(const SequenceFamily& fam) {
    SequenceFamily s;
    s.b = fam.b;
    for (const auto& [key, v] : fam.a) s.a[key] = v + fam.b * inv(v, "a = 0");
    for (const auto& [key, v] : fam.c) s.c[key] = v + fam.b * inv(v, "c = 0");
    return s;
}

Rational corollary_A_f(const MultiIndex& m, const MultiIndex& k, const AParams& p) {
    if (!geq(m, k)) return 0;
    int n = static_cast<int>(m.size());
    const Rational& q = p.q;
    const auto& t = p.t;
    const auto& u = p.u;
    int K = total(k);
    Rational r = qpow(q, static_cast<long>(n - 1) * (K - total(m)));
    std::vector<Rational> uk(n);
    for (int i = 0; i < n; ++i) uk[i] = u[i] * qpow(q, k[i]);
    for (int i = 0; i < n; ++i) {
        r *= qpow(t[i], static_cast<long>(n) * (m[i] - k[i]));
        for (int j = i + 1; j < n; ++j) r *= inv(uk[i] - uk[j], "u_i q^k_i = u_j q^k_j");
    }
    Matrix mx(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i) {
        Rational x = u[i] * qpow(q, m[i]);
        Rational pv = 0;
        if (m[i] != k[i]) {
            Rational w = p.t0 * u[i] * qpow(q, m[i] + K);
            Strict z;
            z.mul(1 - w).div(1 - w / t[i]);
            for (int s = 0; s < n; ++s) z.mul(x - uk[s]).div(x / t[i] - uk[s]);
            pv = z.value();
        }
        for (int j = 0; j < n; ++j) mx[i][j] = qpow(x, n - 1 - j) * (1 - qpow(t[i], j - n) * pv);
    }
    Strict z(r * det(mx));
    for (int i = 0; i < n; ++i) {
        int L = m[i] - k[i];
        Rational w = p.t0 * u[i] * qpow(q, 1 + k[i] + K);
        z.poch(w / t[i], q, L).ipoch(w, q, L);
        for (int j = 0; j < n; ++j) {
            Rational v = qpow(q, 1 + k[i] - k[j]) * u[i] / u[j];
            z.poch(v / t[i], q, L).ipoch(v, q, L);
        }
    }
    return z.value();
}

Rational corollary_A_g(const MultiIndex& k, const MultiIndex& l, const AParams& p) {
    if (!geq(k, l)) return 0;
    int n = static_cast<int>(k.size());
    const Rational& q = p.q;
    const auto& t = p.t;
    const auto& u = p.u;
    int K = total(k);
    Strict z;
    for (int i = 0; i < n; ++i) {
        int L = k[i] - l[i];
        Rational w = p.t0 * u[i] * qpow(q, l[i] + K);
        z.poch(w * q / t[i], q, L).ipoch(w, q, L);
        for (int j = 0; j < n; ++j) {
            Rational x = u[i] / u[j];
            z.poch(q * x, q, k[i] - k[j]).poch(t[j] * x, q, l[i] - l[j]);
            z.ipoch(t[j] * x, q, k[i] - k[j]).ipoch(q * x, q, l[i] - l[j]);
            z.poch(qpow(q, l[i] - l[j]) * t[j] * x, q, L).ipoch(qpow(q, 1 + l[i] - l[j]) * x, q, L);
        }
    }
    return z.value();
}

Rational corollary_C_f(const MultiIndex& m, const MultiIndex& k, const CParams& p) {
    if (!geq(m, k)) return 0;
    int n = static_cast<int>(m.size());
    const Rational& q = p.q;
    const Rational& a = p.a;
    const auto& t = p.t;
    const auto& u = p.u;
    std::vector<Rational> uk(n);
    for (int i = 0; i < n; ++i) uk[i] = u[i] * qpow(q, k[i]);
    Rational r = 1;
    for (int i = 0; i < n; ++i) {
        r *= qpow(t[i], static_cast<long>(n) * (m[i] - k[i]));
        r *= inv(uk[i] + qpow(q, -k[i]) / (a * u[i]), "C-type normalization");
        for (int j = i + 1; j < n; ++j)
            r *= inv((uk[i] - uk[j]) * (1 - qpow(q, -k[i] - k[j]) / (a * u[i] * u[j])), "C-type normalization");
    }
    Strict z(r);
    for (int i = 0; i < n; ++i) {
        int L = m[i] - k[i];
        for (int j = 0; j < n; ++j) {
            Rational w = a * u[i] * u[j] * qpow(q, 1 + k[i] + k[j]);
            z.poch(w / t[i], q, L).ipoch(w, q, L);
            if (i == j && L > 0) {
                // (q/t_i)_L with its last factor moved into row i of the determinant
                z.poch(q / t[i], q, L - 1).ipoch(q, q, L);
            } else {
                Rational v = qpow(q, 1 + k[i] - k[j]) * u[i] / u[j];
                z.poch(v / t[i], q, L).ipoch(v, q, L);
            }
        }
    }
    Matrix mx(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i) {
        Rational A = u[i] * qpow(q, m[i]) + qpow(q, -m[i]) / (a * u[i]);
        if (m[i] == k[i]) {
            for (int j = 0; j < n; ++j) mx[i][j] = qpow(A, n - j);
            continue;
        }
        Rational B = u[i] * qpow(q, m[i]) / t[i] + t[i] * qpow(q, -m[i]) / (a * u[i]);
        Rational D = 1 - qpow(q, m[i] - k[i]) / t[i];
        Strict pz;
        for (int s = 0; s < n; ++s) {
            Rational w = qpow(q, -m[i] - k[s]) / (a * u[i] * u[s]);
            pz.mul(1 - w).div(1 - t[i] * w);
            if (s == i) {
                pz.mul(1 - qpow(q, m[i] - k[i]));
            } else {
                Rational x = u[i] * qpow(q, m[i]);
                pz.mul(x - uk[s]).div(x / t[i] - uk[s]);
            }
        }
        Rational pv = pz.value();
        for (int j = 0; j < n; ++j) mx[i][j] = D * qpow(A, n - j) - qpow(B, n - j) * pv;
    }
    z.mul(det(mx));
    return z.value();
}

namespace {

Rational corollary_C_g_impl(const MultiIndex& k, const MultiIndex& l, const CParams& p, int shift) {
    if (!geq(k, l)) return 0;
    int n = static_cast<int>(k.size());
    const Rational& q = p.q;
    const Rational& a = p.a;
    const auto& t = p.t;
    const auto& u = p.u;
    Strict z;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rational x = u[i] / u[j];
            Rational w = a * u[i] * u[j];
            z.poch(q * x, q, k[i] - k[j]).poch(w * q / t[j], q, k[i] + k[j]);
            z.poch(t[j] * x, q, l[i] - l[j]).poch(w, q, l[i] + l[j]);
            z.ipoch(t[j] * x, q, k[i] - k[j]).ipoch(w, q, k[i] + k[j]);
            z.ipoch(q * x, q, l[i] - l[j]).ipoch(w * q / t[j], q, l[i] + l[j]);
            int L = k[i] - l[i];
            z.poch(qpow(q, l[i] - l[j]) * t[j] * x, q, L).poch(w * qpow(q, l[i] + l[j]), q, L);
            z.ipoch(qpow(q, 1 + l[i] - l[j]) * x, q, L).ipoch(w * qpow(q, shift + l[i] + l[j]) / t[j], q, L);
        }
    return z.value();
}

}  // namespace

Rational corollary_C_g(const MultiIndex& k, const MultiIndex& l, const CParams& p) {
    return corollary_C_g_impl(k, l, p, 1);
}

Rational corollary_C_g_printed(const MultiIndex& k, const MultiIndex& l, const CParams& p) {
    return corollary_C_g_impl(k, l, p, 0);
}

AParams random_A_params(int n, std::mt19937_64& rng) {
    AParams p;
    p.q = draw_rational(rng);
    p.t0 = draw_rational(rng);
    for (int i = 0; i < n; ++i) {
        p.t.push_back(draw_rational(rng));
        p.u.push_back(draw_rational(rng));
    }
    return p;
}

CParams random_C_params(int n, std::mt19937_64& rng) {
    CParams p;
    p.q = draw_rational(rng);
    p.a = draw_rational(rng);
    for (int i = 0; i < n; ++i) {
        p.t.push_back(draw_rational(rng));
        p.u.push_back(draw_rational(rng));
    }
    return p;
}

Rational bressoud_f(int m, int k, const Rational& a, const Rational& b, const Rational& q) {
    if (m < k) return 0;
    Strict z;
    z.mul(1 - a * qpow(q, 2 * k)).div(1 - a);
    z.poch(b, q, m + k).poch(b / a, q, m - k);
    z.ipoch(a * q, q, m + k).ipoch(q, q, m - k);
    return z.value();
}

Rational bressoud_g(int k, int l, const Rational& a, const Rational& b, const Rational& q) {
    if (k < l) return 0;
    Strict z(qpow(b / a, k - l));
    z.mul(1 - b * qpow(q, 2 * l)).div(1 - b);
    z.poch(a, q, k + l).poch(a / b, q, k - l);
    z.ipoch(b * q, q, k + l).ipoch(q, q, k - l);
    return z.value();
}

bool diagonally_equivalent(const Entry1& f, const Entry1& g, const Entry1& fB, const Entry1& gB, int window) {
    // alpha_m = f(m,0)/fB(m,0), beta_k = f(k,k)/(alpha_k fB(k,k))
    auto pivot = [&](int m, int k) {
        Rational d = fB(m, k), v = f(m, k);
        if (d == 0 || v == 0) throw SingularError("vanishing reference entry in diagonal equivalence");
        return Rational(v / d);
    };
    std::vector<Rational> alpha(window + 1), beta(window + 1);
    for (int m = 0; m <= window; ++m) alpha[m] = pivot(m, 0);
    beta[0] = 1;
    for (int k = 1; k <= window; ++k) beta[k] = pivot(k, k) / alpha[k];
    for (int m = 0; m <= window; ++m)
        for (int k = 0; k <= m; ++k)
            if (f(m, k) != alpha[m] * beta[k] * fB(m, k)) return false;
    for (int k = 0; k <= window; ++k)
        for (int l = 0; l <= k; ++l)
            if (g(k, l) * beta[k] * alpha[l] != gB(k, l)) return false;
    return true;
}

Rational pieri_matrix_entry(const MultiIndex& m, const MultiIndex& k, const std::vector<Rational>& U,
                            const Rational& q, const Rational& t) {
    if (!geq(m, k)) return 0;
    int n = static_cast<int>(m.size());
    MultiIndex theta(n);
    std::vector<Rational> u(n);
    int K = total(k);
    for (int i = 0; i < n; ++i) {
        theta[i] = m[i] - k[i];
        u[i] = U[i] * qpow(q, k[i] + K) * qpow(t, n - 1 - i);
    }
    QtPoint pt;
    pt.q = q;
    pt.t = t;
    return pieri_coeff(theta, u, pt);
}

Rational recursion_matrix_entry(const MultiIndex& k, const MultiIndex& l, const std::vector<Rational>& U,
                                const Rational& q, const Rational& t) {
    if (!geq(k, l)) return 0;
    int n = static_cast<int>(k.size());
    MultiIndex theta(n);
    std::vector<Rational> u(n);
    int L = total(l);
    for (int i = 0; i < n; ++i) {
        theta[i] = k[i] - l[i];
        u[i] = U[i] * qpow(q, l[i] + L) * qpow(t, n - 1 - i);
    }
    QtPoint pt;
    pt.q = q;
    pt.t = t;
    return recursion_coeff(theta, u, pt);
}

namespace {

struct WindowIndex {
    int n, w;
    long flat(const MultiIndex& k) const {
        long r = 0;
        for (int x : k) r = r * (w + 1) + x;
        return r;
    }
};

}  // namespace

VerificationReport verify_pair(const EntryPair& pair, int n, int window, int draw) {
    VerificationReport rep;
    rep.name = pair.label;
    rep.n = n;
    rep.window = window;
    rep.draws = 1;
    MultiIndex zero(n, 0), top(n, window);
    auto pts = box(zero, top);
    long N = static_cast<long>(pts.size());
    WindowIndex wi{n, window};
    std::vector<Rational> F(N * N), G(N * N);
    std::vector<std::exception_ptr> errs(omp_get_max_threads());
#pragma omp parallel for schedule(dynamic)
    for (long a = 0; a < N; ++a) {
        int id = omp_get_thread_num();
        if (errs[id]) continue;
        try {
            for (long b = 0; b < N; ++b) {
                if (!geq(pts[a], pts[b])) continue;
                F[a * N + b] = pair.f(pts[a], pts[b]);
                G[a * N + b] = pair.g(pts[a], pts[b]);
            }
        } catch (...) {
            errs[id] = std::current_exception();
        }
    }
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
    for (int rel = 0; rel < 2; ++rel) {
        const auto& X = rel == 0 ? F : G;
        const auto& Y = rel == 0 ? G : F;
        for (long a = 0; a < N; ++a)
            for (long b = 0; b < N; ++b) {
                if (!geq(pts[a], pts[b])) continue;
                Rational s = region_sum_serial(pts[b], pts[a], [&](const MultiIndex& k) {
                    long kk = wi.flat(k);
                    return Rational(X[a * N + kk] * Y[kk * N + b]);
                });
                ++rep.checks;
                Rational expect = a == b ? 1 : 0;
                if (s != expect) {
                    ++rep.failures;
                    if (rep.witnesses.size() < 20)
                        rep.witnesses.push_back({pts[a], pts[b], draw, rel == 0 ? "fg" : "gf", s});
                }
            }
    }
    return rep;
}

VerificationReport verify_orthogonality(const EntryFactory& factory, int n, int window, int draws,
                                        std::uint64_t seed, const std::string& name) {
    if (window < 0) throw std::invalid_argument("window must be nonnegative");
    VerificationReport rep;
    rep.name = name;
    rep.n = n;
    rep.window = window;
    rep.draws = draws;
    for (int d = 0; d < draws; ++d) {
        auto rng = rng_for(seed, d);
        bool done = false;
        for (int attempt = 0; attempt < 100 && !done; ++attempt) {
            EntryPair pair = factory(rng);
            try {
                auto one = verify_pair(pair, n, window, d);
                rep.checks += one.checks;
                rep.failures += one.failures;
                for (auto& w : one.witnesses)
                    if (rep.witnesses.size() < 20) rep.witnesses.push_back(w);
                if (rep.name.empty()) rep.name = pair.label;
                done = true;
            } catch (const PoleError&) {
                ++rep.redraws;
            } catch (const SingularError&) {
                ++rep.redraws;
            }
        }
        if (!done) throw DegenerateError("no pole-free parameter draw found");
    }
    return rep;
}

Sequence inverse_relations_apply(SumDirection dir, const EntryFn& entries, const Sequence& seq, int n,
                                 int window) {
    MultiIndex zero(n, 0), top(n, window);
    for (const auto& [k, v] : seq) {
        if (static_cast<int>(k.size()) != n || !geq(k, zero) || !geq(top, k))
            throw SupportError("sequence support exceeds the window");
    }
    auto at = [&](const MultiIndex& k) {
        auto it = seq.find(k);
        return it == seq.end() ? Rational(0) : it->second;
    };
    Sequence out;
    for (const auto& m : box(zero, top)) {
        Rational s;
        if (dir == SumDirection::second_index)
            s = region_sum_serial(zero, m, [&](const MultiIndex& k) {
                Rational a = at(k);
                return a == 0 ? a : Rational(entries(m, k) * a);
            });
        else
            s = region_sum_serial(m, top, [&](const MultiIndex& k) {
                Rational a = at(k);
                return a == 0 ? a : Rational(entries(k, m) * a);
            });
        if (s != 0) out[m] = s;
    }
    return out;
}

InversePairSequences an87_sequences(const AParams& p, const Rational& b, const Rational& d, int M, int window) {
    int n = static_cast<int>(p.u.size());
    const Rational& q = p.q;
    const Rational& t0 = p.t0;
    const auto& t = p.t;
    const auto& u = p.u;
    Rational T = 1;
    for (const auto& x : t) T *= x;
    Rational qm = qpow(q, -M);
    InversePairSequences out;
    MultiIndex zero(n, 0), top(n, window);
    for (const auto& k : box(zero, top)) {
        int K = total(k);
        Strict zb(qpow(q, K)), za(qpow(q, K));
        zb.pochs({d, qm}, q, K).ipochs({t0 * q / b, b * d * T * qm / t0}, q, K);
        za.pochs({t0 * q / (b * d), t0 * q / (b * T)}, q, M).ipochs({t0 * q / b, t0 * q / (b * d * T)}, q, M);
        za.pochs({d, qm}, q, K).ipochs({t0 * q / (b * T), b * d * qm / t0}, q, K);
        for (int i = 0; i < n; ++i) {
            Rational ui = u[i];
            for (int j = i + 1; j < n; ++j) {
                zb.mul(ui * qpow(q, k[i]) - u[j] * qpow(q, k[j]));
                za.mul(ui * qpow(q, k[i]) - u[j] * qpow(q, k[j]));
            }
            for (int j = 0; j < n; ++j) {
                Rational x = ui / u[j];
                zb.poch(t[j] * x, q, k[i] - k[j]).ipoch(q * x, q, k[i] - k[j]);
                za.poch(t[j] * x, q, k[i] - k[j]).ipoch(q * x, q, k[i] - k[j]);
            }
            Rational e = t0 * t0 * ui * qpow(q, 1 + M) / (b * d * T);
            zb.poch(t0 * ui * q, q, k[i] + K).ipoch(t0 * ui * q / t[i], q, k[i] + K);
            zb.pochs({b * ui, e}, q, k[i]).ipochs({t0 * ui * q / d, t0 * ui * qpow(q, 1 + M)}, q, k[i]);
            za.pochs({t0 * ui * q, t0 * ui * q / (d * t[i])}, q, M).ipochs({t0 * ui * q / t[i], t0 * ui * q / d}, q, M);
            za.poch(d * qm / (t0 * ui), q, K - k[i]).ipoch(d * t[i] * qm / (t0 * ui), q, K - k[i]);
            za.pochs({b * ui, e}, q, k[i]).ipochs({t0 * ui * q / (d * t[i]), t0 * ui * qpow(q, 1 + M) / t[i]}, q, k[i]);
            za.mul(qpow(t[i], -k[i]));
        }
        Rational bv = zb.value(), av = za.value();
        if (bv != 0) out.b[k] = bv;
        if (av != 0) out.a[k] = av;
    }
    return out;
}

}  // namespace macd
