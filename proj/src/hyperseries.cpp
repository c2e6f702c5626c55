#include "macd/hyperseries.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "identities.hpp"
#include "macd/partitions.hpp"
#include "macd/random.hpp"

namespace macd {

const Rational& IdParams::at(const std::string& name) const {
    auto it = s.find(name);
    if (it == s.end()) throw std::out_of_range("missing parameter " + name);
    return it->second;
}

const std::vector<Rational>& IdParams::vec(const std::string& name) const {
    auto it = v.find(name);
    if (it == v.end()) throw std::out_of_range("missing parameter " + name);
    return it->second;
}

namespace {

std::string join(const std::vector<Rational>& xs) {
    std::string out;
    for (size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + to_string(xs[i]);
    return out;
}

std::string join(const std::vector<int>& xs) {
    std::string out;
    for (size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
    return out;
}

}  // namespace

std::map<std::string, std::string> IdParams::describe() const {
    std::map<std::string, std::string> out;
    out["q"] = to_string(q);
    out["n"] = std::to_string(n);
    for (const auto& [k, x] : s) out[k] = to_string(x);
    for (const auto& [k, x] : v) out[k] = join(x);
    out["M"] = std::to_string(M);
    if (!m.empty()) out["m"] = join(m);
    return out;
}

void TruncationPolicy::validate() const {
    if (!(target > 0)) throw std::invalid_argument("truncation target must be positive");
    if (consecutive < 2) throw std::invalid_argument("consecutive-small-terms count must be at least 2");
    if (max_shell < 0) throw std::invalid_argument("negative shell cap");
}

bool NumericPair::agrees(double target) const {
    BigFloat diff = abs(lhs.value - rhs);
    BigFloat tol = BigFloat(target) * abs(rhs);
    BigFloat tail = 10 * lhs.error;
    return diff <= (tol > tail ? tol : tail);
}

namespace detail {

BigComplex inf_ratio(const std::vector<BigComplex>& num, const std::vector<BigComplex>& den, const Rational& q) {
    BigComplex r(1);
    for (const auto& a : num) r *= poch_inf(a, q).value;
    for (const auto& a : den) {
        BigComplex d = poch_inf(a, q).value;
        if (is_zero(d)) throw PoleError("infinite product vanishes in a denominator");
        r /= d;
    }
    return r;
}

NumericPair numeric_sum(const IdParams& p, const TruncationPolicy& policy, NumericTerm term, NumericRhs rhs) {
    auto V = vals<BigComplex>(p);
    NumericPair r;
    r.lhs = sum_shells(p.n, [&](const MultiIndex& k) { return term(V, k); }, policy, &r.shells);
    r.rhs = rhs(V, p.q);
    return r;
}

Rational draw_positive_q(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(1, 4), den(2, 9);
    for (;;) {
        Rational q(num(rng), den(rng));
        q.canonicalize();
        if (q <= Rational(1, 2)) return q;
    }
}

std::vector<Rational> draw_distinct(int n, std::mt19937_64& rng) {
    std::vector<Rational> out;
    while (static_cast<int>(out.size()) < n) {
        Rational x = draw_rational(rng);
        bool fresh = true;
        for (const auto& y : out)
            if (x == y || x == -y) fresh = false;
        if (fresh) out.push_back(x);
    }
    return out;
}

IdParams draw_generic(const IdentitySpec& spec, int n, const std::vector<int>& sizes, std::mt19937_64& rng,
                      bool positive_q) {
    IdParams p;
    p.n = spec.multivariable ? n : 1;
    if (spec.size == "lambda") {
        QtPoint pt = draw_qt_point(rng);
        p.q = pt.q;
        p.s["t"] = pt.t;
        p.s["u"] = draw_rational(rng);
        if (!sizes.empty()) {
            p.m = sizes;
        } else {
            std::uniform_int_distribution<int> step(0, 1);
            p.m.assign(n + 1, 0);
            p.m[n] = step(rng) + 1;
            for (int i = n - 1; i >= 0; --i) p.m[i] = p.m[i + 1] + step(rng);
        }
        p.n = static_cast<int>(p.m.size()) - 1;
        return p;
    }
    p.q = positive_q ? draw_positive_q(rng) : draw_rational(rng);
    for (const auto& name : spec.scalars) p.s[name] = draw_rational(rng);
    for (const auto& name : spec.vectors) p.v[name] = draw_distinct(p.n, rng);
    std::uniform_int_distribution<int> small(0, 2);
    if (spec.size == "M") {
        p.M = sizes.empty() ? small(rng) + 1 : sizes[0];
    } else if (spec.size == "m") {
        if (!sizes.empty()) {
            if (static_cast<int>(sizes.size()) != p.n) throw LengthError("box sizes must have n entries");
            p.m = sizes;
        } else {
            for (int i = 0; i < p.n; ++i) p.m.push_back(small(rng));
        }
    }
    return p;
}

}  // namespace detail

const std::vector<IdentitySpec>& identity_registry() {
    static const std::vector<IdentitySpec> reg = [] {
        std::vector<IdentitySpec> r;
        detail::register_classical(r);
        detail::register_new(r);
        detail::register_specialized(r);
        return r;
    }();
    return reg;
}

const IdentitySpec& find_identity(const std::string& id) {
    for (const auto& s : identity_registry())
        if (s.id == id) return s;
    throw std::out_of_range("unknown identity: " + id);
}

std::vector<MultiIndex> region_points(const IdentitySpec& spec, const IdParams& p) {
    switch (spec.region) {
        case Region::simplex:
            return compositions_upto(p.n, p.M);
        case Region::shell:
            return compositions_upto(p.n, p.M, true);
        case Region::box:
            if (static_cast<int>(p.m.size()) != p.n) throw LengthError("box sizes must have n entries");
            return box(MultiIndex(p.n, 0), p.m);
        case Region::partition_pieri:
            if (p.m.size() < 2) throw LengthError("partition needs n+1 parts");
            return compositions_upto(static_cast<int>(p.m.size()) - 1, p.m.back());
        case Region::orthant:
            break;
    }
    throw std::invalid_argument(spec.id + " has an infinite summation region");
}

ExactPair eval_terminating(const IdentitySpec& spec, const IdParams& p) {
    if (!spec.terminating || !spec.rhs) throw std::invalid_argument(spec.id + " is not terminating");
    ExactPair r;
    if (spec.region == Region::box) {
        r.lhs = region_sum_parallel(MultiIndex(p.n, 0), p.m, [&](const MultiIndex& k) { return spec.term(p, k); });
    } else {
        for (const auto& k : region_points(spec, p)) r.lhs += spec.term(p, k);
    }
    r.rhs = spec.rhs(p);
    return r;
}

Estimate sum_shells(int n, const std::function<BigComplex(const MultiIndex&)>& term, const TruncationPolicy& policy,
                    int* shells_used) {
    policy.validate();
    BigComplex S(0);
    std::vector<BigFloat> mags;
    BigFloat target(policy.target);
    int last = policy.fixed_shells >= 0 ? policy.fixed_shells : policy.max_shell;
    long terms = 0;
    for (int s = 0; s <= last; ++s) {
        BigComplex shell(0);
        for (const auto& k : compositions_upto(n, s, true)) {
            shell += term(k);
            ++terms;
        }
        S += shell;
        mags.push_back(abs(shell));
        if (shells_used) *shells_used = s + 1;
        BigFloat rounding = abs(S) * pow2(-static_cast<long>(current_precision_bits()) + 8) * (terms + 1);
        if (policy.fixed_shells >= 0) {
            if (s == last) return {S, rounding};
            continue;
        }
        int L = policy.consecutive;
        if (s < L) continue;
        BigFloat small = target * abs(S) * BigFloat(1e-3);
        bool quiet = true;
        for (int j = s - L + 1; j <= s; ++j)
            if (mags[j] > small) quiet = false;
        if (!quiet) continue;
        BigFloat rho(0);
        for (int j = s - L + 2; j <= s; ++j)
            if (mags[j - 1] > 0) {
                BigFloat ratio = mags[j] / mags[j - 1];
                if (ratio > rho) rho = ratio;
            }
        if (rho >= 1) continue;
        BigFloat tail = mags[s] * rho / (1 - rho);
        if (tail <= target * abs(S) * BigFloat(1e-2) || (S.re == 0 && S.im == 0 && tail == 0))
            return {S, tail + rounding};
    }
    throw ConvergenceError("series did not settle within " + std::to_string(policy.max_shell) + " shells");
}

NumericPair eval_nonterminating(const IdentitySpec& spec, const IdParams& p, const TruncationPolicy& policy,
                                unsigned precision) {
    if (!spec.numeric) throw std::invalid_argument(spec.id + " has no numeric evaluator");
    if (!(p.q > 0 && p.q < 1)) throw std::invalid_argument("numeric evaluation needs 0 < q < 1");
    if (spec.argument && abs(spec.argument(p)) >= 1 && policy.fixed_shells < 0)
        throw ConvergenceError(spec.id + ": convergence condition fails");
    PrecisionGuard guard(precision);
    return spec.numeric(p, policy);
}

bool IdentityReport::passed() const {
    if (records.empty()) return false;
    for (const auto& r : records)
        if (r.status != "PASS") return false;
    return true;
}

IdentityReport check_identity(const std::string& id, int n, const std::vector<int>& sizes, int draws,
                              std::uint64_t seed, const TruncationPolicy& policy, unsigned precision) {
    const IdentitySpec& spec = find_identity(id);
    IdentityReport rep;
    rep.id = id;
    rep.n = spec.multivariable ? n : 1;
    rep.sizes = sizes;
    rep.seed = seed;
    const Rational margin(1, 2);
    for (int d = 0; d < draws; ++d) {
        auto rng = rng_for(seed, static_cast<std::uint64_t>(d));
        DrawRecord rec;
        rec.draw = d;
        rec.status = "ERROR";
        for (int attempt = 0; attempt < 200; ++attempt) {
            IdParams p;
            try {
                p = detail::draw_generic(spec, n, sizes, rng, !spec.terminating);
                if (!spec.terminating && spec.argument && abs(spec.argument(p)) > margin) continue;
                rec.params = p.describe();
                if (spec.terminating) {
                    auto r = eval_terminating(spec, p);
                    rec.lhs = to_string(r.lhs);
                    rec.rhs = to_string(r.rhs);
                    rec.error_bound = "0";
                    rec.status = r.lhs == r.rhs ? "PASS" : "FAIL";
                } else {
                    auto r = eval_nonterminating(spec, p, policy, precision);
                    rec.lhs = to_string(r.lhs.value);
                    rec.rhs = to_string(r.rhs);
                    rec.error_bound = to_string(BigComplex(r.lhs.error), 6);
                    rec.status = r.agrees(policy.target) ? "PASS" : "FAIL";
                }
                rec.message.clear();
                break;
            } catch (const PoleError& e) {
                rec.message = e.what();
            } catch (const SingularError& e) {
                rec.message = e.what();
            } catch (const std::exception& e) {
                rec.message = e.what();
                break;
            }
        }
        rep.records.push_back(rec);
    }
    return rep;
}

}  // namespace macd
