#include "macd/symfun.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "macd/linalg.hpp"

namespace macd {

SymPoly SymPoly::constant(int nvars, const Rational& c) {
    SymPoly p(nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
}

Rational SymPoly::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void SymPoly::add_term(const Exponent& e, const Rational& c) {
    if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("exponent length mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int SymPoly::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int x : e) s += x;
        d = std::max(d, s);
    }
    return d;
}

bool SymPoly::is_symmetric() const {
    for (int i = 0; i + 1 < nvars_; ++i) {
        for (const auto& [e, c] : terms_) {
            Exponent s = e;
            std::swap(s[i], s[i + 1]);
            if (coeff(s) != c) return false;
        }
    }
    return true;
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
    if (o.nvars_ != nvars_) throw std::invalid_argument("variable count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) {
    if (o.nvars_ != nvars_) throw std::invalid_argument("variable count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

SymPoly& SymPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("variable count mismatch");
    SymPoly r(a.nvars());
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) {
            Exponent e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

Rational SymPoly::eval(const std::vector<Rational>& x) const {
    if (static_cast<int>(x.size()) != nvars_) throw std::invalid_argument("point length mismatch");
    Rational s = 0;
    for (const auto& [e, c] : terms_) {
        Rational m = c;
        for (int i = 0; i < nvars_; ++i) m *= qpow(x[i], e[i]);
        s += m;
    }
    return s;
}

BigComplex SymPoly::eval(const std::vector<BigComplex>& x) const {
    if (static_cast<int>(x.size()) != nvars_) throw std::invalid_argument("point length mismatch");
    BigComplex s;
    for (const auto& [e, c] : terms_) {
        BigComplex m(c);
        for (int i = 0; i < nvars_; ++i)
            if (e[i]) m *= ipow(x[i], e[i]);
        s += m;
    }
    return s;
}

std::string SymPoly::str() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Exponent, Rational>> v(terms_.begin(), terms_.end());
    auto deg = [](const Exponent& e) {
        int s = 0;
        for (int x : e) s += x;
        return s;
    };
    std::sort(v.begin(), v.end(), [&](const auto& a, const auto& b) {
        int da = deg(a.first), db = deg(b.first);
        if (da != db) return da > db;
        return a.first > b.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : v) {
        Rational a = abs(c);
        if (first) os << (c < 0 ? "-" : "");
        else os << (c < 0 ? " - " : " + ");
        first = false;
        bool one = deg(e) == 0;
        if (a != 1 || one) os << to_string(a) << (one ? "" : "*");
        bool lead = true;
        for (int i = 0; i < nvars_; ++i) {
            if (!e[i]) continue;
            if (!lead) os << "*";
            lead = false;
            os << "x" << (i + 1);
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

PExp p_add(const PExp& a, const PExp& b, const Rational& s) {
    PExp r = a;
    for (const auto& [l, c] : b) {
        Rational& v = r[l];
        v += s * c;
        if (v == 0) r.erase(l);
    }
    return r;
}

PExp p_scale(const PExp& a, const Rational& s) {
    PExp r;
    if (s == 0) return r;
    for (const auto& [l, c] : a) r[l] = c * s;
    return r;
}

PExp p_mul(const PExp& a, const PExp& b) {
    PExp r;
    for (const auto& [la, ca] : a)
        for (const auto& [lb, cb] : b) {
            std::vector<int> parts = la.parts();
            parts.insert(parts.end(), lb.parts().begin(), lb.parts().end());
            std::sort(parts.rbegin(), parts.rend());
            Partition l(parts);
            Rational& v = r[l];
            v += ca * cb;
            if (v == 0) r.erase(l);
        }
    return r;
}

PExp p_one() { return PExp{{Partition(), Rational(1)}}; }

namespace {

// ways to place the parts rho[idx..] into bins with the given capacities
long count_fillings(const std::vector<int>& rho, size_t idx, std::vector<int> caps,
                    std::map<std::pair<size_t, std::vector<int>>, long>& memo) {
    std::sort(caps.begin(), caps.end());
    if (idx == rho.size()) {
        for (int c : caps)
            if (c) return 0;
        return 1;
    }
    auto key = std::make_pair(idx, caps);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    long total = 0;
    for (size_t b = 0; b < caps.size(); ++b) {
        if (caps[b] < rho[idx]) continue;
        std::vector<int> c2 = caps;
        c2[b] -= rho[idx];
        total += count_fillings(rho, idx + 1, c2, memo);
    }
    memo[key] = total;
    return total;
}

std::mutex table_mutex;
std::map<int, std::map<Partition, std::map<Partition, Rational>>> p_to_m_cache;
std::map<int, std::map<Partition, std::map<Partition, Rational>>> m_to_p_cache;
std::map<std::string, PExp> gs_cache;

const std::map<Partition, std::map<Partition, Rational>>& p_to_m_locked(int d) {
    auto it = p_to_m_cache.find(d);
    if (it != p_to_m_cache.end()) return it->second;
    std::map<Partition, std::map<Partition, Rational>> table;
    auto parts = partitions_of(d);
    for (const auto& rho : parts) {
        auto& row = table[rho];
        for (const auto& lam : parts) {
            std::map<std::pair<size_t, std::vector<int>>, long> memo;
            long n = count_fillings(rho.parts(), 0, lam.parts(), memo);
            if (n) row[lam] = n;
        }
    }
    return p_to_m_cache.emplace(d, std::move(table)).first->second;
}

}  // namespace

const std::map<Partition, std::map<Partition, Rational>>& p_to_m(int d) {
    std::lock_guard<std::mutex> lock(table_mutex);
    return p_to_m_locked(d);
}

const std::map<Partition, std::map<Partition, Rational>>& m_to_p(int d) {
    std::lock_guard<std::mutex> lock(table_mutex);
    auto it = m_to_p_cache.find(d);
    if (it != m_to_p_cache.end()) return it->second;
    const auto& fwd = p_to_m_locked(d);
    auto parts = partitions_of(d);
    int n = static_cast<int>(parts.size());
    Matrix a(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto f = fwd.at(parts[i]).find(parts[j]);
            if (f != fwd.at(parts[i]).end()) a[i][j] = f->second;
        }
    // p = A m, so m = A^{-1} p
    Matrix inv = inverse(a);
    std::map<Partition, std::map<Partition, Rational>> table;
    for (int i = 0; i < n; ++i) {
        auto& row = table[parts[i]];
        for (int j = 0; j < n; ++j)
            if (inv[i][j] != 0) row[parts[j]] = inv[i][j];
    }
    return m_to_p_cache.emplace(d, std::move(table)).first->second;
}

SymPoly monomial_sym(const Partition& lambda, int nvars, bool allow_zero) {
    if (lambda.length() > nvars) {
        if (allow_zero) return SymPoly(nvars);
        throw LengthError("partition " + lambda.str() + " longer than variable count");
    }
    std::vector<int> e = lambda.padded(nvars);
    std::sort(e.begin(), e.end());
    SymPoly p(nvars);
    do {
        p.add_term(e, 1);
    } while (std::next_permutation(e.begin(), e.end()));
    return p;
}

SymPoly powersum(int k, int nvars) {
    if (k < 1) throw std::invalid_argument("power sum index must be positive");
    return monomial_sym(Partition{k}, nvars);
}

SymPoly elementary(int k, int nvars) {
    if (k < 0) throw std::invalid_argument("negative index");
    if (k == 0) return SymPoly::constant(nvars, 1);
    return monomial_sym(Partition(std::vector<int>(k, 1)), nvars, true);
}

SymPoly complete(int k, int nvars) {
    if (k < 0) throw std::invalid_argument("negative index");
    SymPoly p(nvars);
    for (const auto& lam : partitions_of(k, nvars)) p += monomial_sym(lam, nvars);
    return p;
}

SymPoly g_k(int k, int nvars, const QtPoint& pt) {
    if (k < 0) throw std::invalid_argument("negative index");
    SymPoly p(nvars);
    for (const auto& lam : partitions_of(k, nvars)) {
        Rational c = 1;
        for (int x : lam.parts()) c *= poch_int(pt.t, pt.q, x) / poch_int(pt.q, pt.q, x);
        p += monomial_sym(lam, nvars) * c;
    }
    return p;
}

PExp g_k_p(int k, const QtPoint& pt) {
    PExp f;
    for (const auto& lam : partitions_of(k)) {
        Rational c = 1 / z_lambda(lam);
        for (int x : lam.parts()) {
            Rational den = 1 - qpow(pt.q, x);
            if (den == 0) throw PoleError("q^r = 1 in g_k");
            c *= (1 - qpow(pt.t, x)) / den;
        }
        if (c != 0) f[lam] = c;
    }
    return f;
}

PExp e_k_p(int k) {
    PExp f;
    for (const auto& lam : partitions_of(k)) {
        Rational c = 1 / z_lambda(lam);
        if ((k - lam.length()) % 2) c = -c;
        f[lam] = c;
    }
    return f;
}

SymPoly restrict_to(const PExp& f, int nvars) {
    std::map<Partition, Rational> mono;
    for (const auto& [rho, c] : f) {
        const auto& row = p_to_m(rho.size()).at(rho);
        for (const auto& [lam, a] : row) mono[lam] += c * a;
    }
    SymPoly p(nvars);
    for (const auto& [lam, c] : mono)
        if (c != 0) p += monomial_sym(lam, nvars, true) * c;
    return p;
}

BasisExpansion to_powersum(const SymPoly& f) {
    if (!f.is_symmetric()) throw NotSymmetricError("polynomial is not symmetric");
    if (f.nvars() < f.degree())
        throw LengthError("too few variables for a faithful power-sum expansion");
    BasisExpansion r;
    r.basis = Basis::powersum;
    for (const auto& [e, c] : f.terms()) {
        if (!Partition::is_partition(e)) continue;
        Partition lam(e);
        const auto& row = m_to_p(lam.size()).at(lam);
        for (const auto& [rho, a] : row) {
            Rational& v = r.coeffs[rho];
            v += c * a;
            if (v == 0) r.coeffs.erase(rho);
        }
    }
    return r;
}

SymPoly from_powersum(const BasisExpansion& f, int nvars) {
    if (f.basis != Basis::powersum) throw std::invalid_argument("expected a power-sum expansion");
    return restrict_to(f.coeffs, nvars);
}

namespace {

Rational p_norm(const Partition& lam, const QtPoint& pt) {
    Rational r = z_lambda(lam);
    for (int x : lam.parts()) {
        Rational den = 1 - qpow(pt.t, x);
        if (den == 0) throw PoleError("t^r = 1 in scalar product");
        r *= (1 - qpow(pt.q, x)) / den;
    }
    return r;
}

}  // namespace

Rational scalar_product(const PExp& f, const PExp& g, const QtPoint& pt) {
    Rational s = 0;
    for (const auto& [lam, c] : f) {
        auto it = g.find(lam);
        if (it != g.end()) s += c * it->second * p_norm(lam, pt);
    }
    return s;
}

Rational scalar_product(const BasisExpansion& f, const BasisExpansion& g, const QtPoint& pt) {
    if (f.basis != Basis::powersum || g.basis != Basis::powersum)
        throw std::invalid_argument("scalar product takes power-sum expansions");
    return scalar_product(f.coeffs, g.coeffs, pt);
}

PExp macdonald_P_p(const Partition& lambda, const QtPoint& pt) {
    int d = lambda.size();
    if (d == 0) return p_one();
    std::string key = lambda.str() + "|" + to_string(pt.q) + "|" + to_string(pt.t);
    {
        std::lock_guard<std::mutex> lock(table_mutex);
        auto it = gs_cache.find(key);
        if (it != gs_cache.end()) return it->second;
    }
    const auto& mp = m_to_p(d);
    std::vector<Partition> lower;
    for (const auto& mu : partitions_of(d))
        if (mu != lambda && dominates(lambda, mu)) lower.push_back(mu);
    int n = static_cast<int>(lower.size());
    Matrix g(n, std::vector<Rational>(n));
    std::vector<Rational> rhs(n);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) g[a][b] = scalar_product(mp.at(lower[a]), mp.at(lower[b]), pt);
        rhs[a] = -scalar_product(mp.at(lambda), mp.at(lower[a]), pt);
    }
    std::vector<Rational> c;
    try {
        c = solve(g, rhs);
    } catch (const SingularError&) {
        throw DegenerateError("zero norm in Gram-Schmidt at this point");
    }
    PExp f = mp.at(lambda);
    for (int a = 0; a < n; ++a) f = p_add(f, mp.at(lower[a]), c[a]);
    std::lock_guard<std::mutex> lock(table_mutex);
    gs_cache.emplace(key, f);
    return f;
}

PExp macdonald_Q_p(const Partition& lambda, const QtPoint& pt) {
    return p_scale(macdonald_P_p(lambda, pt), b_lambda(lambda, pt, lambda.length()));
}

SymPoly macdonald_P_gramschmidt(const Partition& lambda, int nvars, const QtPoint& pt) {
    if (nvars < lambda.size()) throw LengthError("Gram-Schmidt needs at least |lambda| variables");
    SymPoly p = restrict_to(macdonald_P_p(lambda, pt), nvars);
    if (p.coeff(lambda.padded(nvars)) != 1) throw DegenerateError("Gram-Schmidt result is not monic");
    return p;
}

SymPoly macdonald_Q(const Partition& lambda, int nvars, const QtPoint& pt) {
    return macdonald_P_gramschmidt(lambda, nvars, pt) * b_lambda(lambda, pt, lambda.length());
}

Rational hyper_specialize(const PExp& f, const Rational& u, const Rational& t) {
    Rational s = 0;
    for (const auto& [lam, c] : f) {
        Rational v = c;
        for (int r : lam.parts()) {
            Rational den = 1 - qpow(t, r);
            if (den == 0) throw PoleError("t^r = 1 in specialization");
            v *= (1 - qpow(u, r)) / den;
        }
        s += v;
    }
    return s;
}

namespace {

long weighted_sum(const std::vector<int>& l) {
    long s = 0;
    for (size_t i = 0; i < l.size(); ++i) s += static_cast<long>(i) * l[i];
    return s;
}

}  // namespace

Rational principal_specialize(const Partition& lambda, int N, const QtPoint& pt) {
    if (lambda.length() > N) return 0;
    auto l = lambda.padded(N);
    const Rational& q = pt.q;
    const Rational& t = pt.t;
    ZeroTracked z(qpow(t, weighted_sum(l)));
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) {
            z.poch(qpow(t, j - i + 1), q, l[i] - l[j]);
            z.ipoch(qpow(t, j - i), q, l[i] - l[j]);
        }
    return z.value();
}

Rational hyper_specialize_P(const Partition& lambda, const Rational& u, int n, const QtPoint& pt) {
    if (lambda.length() > n) throw LengthError("n must be at least the length of lambda");
    auto l = lambda.padded(n);
    const Rational& q = pt.q;
    const Rational& t = pt.t;
    ZeroTracked z(qpow(t, weighted_sum(l)));
    for (int i = 0; i < n; ++i) {
        z.poch(u * qpow(t, -i), q, l[i]);
        z.ipoch(qpow(t, n - i), q, l[i]);
        for (int j = i + 1; j < n; ++j) {
            z.poch(qpow(t, j - i + 1), q, l[i] - l[j]);
            z.ipoch(qpow(t, j - i), q, l[i] - l[j]);
        }
    }
    return z.value();
}

Rational hyper_specialize_Q(const Partition& lambda, const Rational& u, int n, const QtPoint& pt) {
    if (lambda.length() > n) throw LengthError("n must be at least the length of lambda");
    auto l = lambda.padded(n);
    const Rational& q = pt.q;
    const Rational& t = pt.t;
    ZeroTracked z(qpow(t, weighted_sum(l)));
    for (int i = 0; i < n; ++i) {
        z.poch(u * qpow(t, -i), q, l[i]);
        z.ipoch(q * qpow(t, n - 1 - i), q, l[i]);
        for (int j = i + 1; j < n; ++j) {
            z.poch(q * qpow(t, j - i), q, l[i] - l[j]);
            z.ipoch(q * qpow(t, j - i - 1), q, l[i] - l[j]);
        }
    }
    return z.value();
}

}  // namespace macd
