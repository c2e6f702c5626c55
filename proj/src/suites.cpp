#include "macd/suites.hpp"

#include <chrono>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "macd/complexmacd.hpp"
#include "macd/hyperseries.hpp"
#include "macd/macdrec.hpp"
#include "macd/matinv.hpp"
#include "macd/partitions.hpp"
#include "macd/random.hpp"
#include "macd/symfun.hpp"

namespace macd {
namespace {

constexpr int kMaxAttempts = 200;

struct Tally {
    CheckResult r;
    long failures = 0;
    BigFloat worst = 0;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    Tally(int criterion, std::string name) {
        r.criterion = criterion;
        r.name = std::move(name);
    }

    void ok() { ++r.cases; }
    void fail(const std::string& witness) {
        ++r.cases;
        if (failures++ == 0) r.detail = witness;
    }
    void expect(bool cond, const std::string& witness) { cond ? ok() : fail(witness); }
    void error(const BigFloat& e) {
        if (e > worst) worst = e;
    }

    CheckResult finish() {
        r.passed = failures == 0 && r.cases > 0;
        if (failures == 0) {
            std::ostringstream os;
            os << r.cases << " cases";
            if (worst > 0) os << ", max relative error " << worst.str(3, std::ios_base::scientific);
            r.detail = os.str();
        } else {
            r.detail = std::to_string(failures) + " of " + std::to_string(r.cases) + " failed; first: " + r.detail;
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return r;
    }
};

std::string point_str(const QtPoint& pt) { return "q=" + to_string(pt.q) + " t=" + to_string(pt.t); }

// runs body on fresh points until it completes without a pole
template <class Draw, class Body>
bool with_redraws(std::mt19937_64& rng, Draw draw, Body body) {
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        auto x = draw(rng);
        try {
            body(x);
            return true;
        } catch (const PoleError&) {
        } catch (const SingularError&) {
        } catch (const DegenerateError&) {
        }
    }
    return false;
}

QtPoint any_point(std::mt19937_64& rng) { return draw_qt_point(rng); }

Rational uniform(std::mt19937_64& rng, int lo, int hi, int den) {
    Rational r(std::uniform_int_distribution<int>(lo, hi)(rng), den);
    r.canonicalize();
    return r;
}

void add_report(Tally& t, const IdentityReport& rep) {
    for (const auto& rec : rep.records) {
        if (rec.status == "PASS") {
            t.ok();
            continue;
        }
        std::ostringstream os;
        os << rep.id << " n=" << rep.n << " sizes=";
        for (int s : rep.sizes) os << s << ' ';
        os << "draw " << rec.draw << " [" << rec.status << "]";
        for (const auto& [k, v] : rec.params) os << ' ' << k << '=' << v;
        if (!rec.message.empty()) os << " (" << rec.message << ')';
        t.fail(os.str());
    }
}

// u = q^i t^j makes the eps_{u,t} normalizations vanish or blow up
bool special_u(const Rational& u, const QtPoint& pt, int bound = 12) {
    for (int i = -bound; i <= bound; ++i)
        for (int j = -bound; j <= bound; ++j)
            if (u == qpow(pt.q, i) * qpow(pt.t, j)) return true;
    return false;
}

std::vector<std::vector<int>> all_boxes(int n, int max) {
    std::vector<std::vector<int>> out;
    for (const auto& k : box(MultiIndex(n, 0), MultiIndex(n, max))) out.push_back(k);
    return out;
}

ComplexPartition to_complex(const std::vector<int>& parts) {
    ComplexPartition c;
    for (int v : parts) c.parts.push_back(BigComplex(Rational(v)));
    return c;
}

BigFloat relative(const BigComplex& a, const BigComplex& b) { return rel_err(a, b); }

std::string big(const BigFloat& x) { return x.str(3, std::ios_base::scientific); }

}  // namespace

CheckResult check_recursion_oracle(std::uint64_t seed) {
    Tally t(1, "recursion formula equals Gram-Schmidt Q_lambda");
    for (int d = 1; d <= 6; ++d)
        for (const auto& lam : partitions_of(d, 3))
            for (int draw = 0; draw < 5; ++draw) {
                auto rng = rng_for(seed, static_cast<std::uint64_t>(d * 1000 + draw));
                bool done = with_redraws(rng, any_point, [&](const QtPoint& pt) {
                    bool eq = recursion_Q(lam, d, pt) == macdonald_Q(lam, d, pt);
                    t.expect(eq, lam.str() + " at " + point_str(pt));
                });
                if (!done) t.fail(lam.str() + ": no pole-free point");
            }
    return t.finish();
}

CheckResult check_pieri(std::uint64_t seed) {
    Tally t(2, "Pieri expansion equals Q_lambda Q_(m)");
    for (int d = 0; d <= 5; ++d)
        for (const auto& lam : partitions_of(d, 2))
            for (int m = 1; d + m <= 6; ++m)
                for (int draw = 0; draw < 5; ++draw) {
                    auto rng = rng_for(seed, static_cast<std::uint64_t>(d * 10000 + m * 100 + draw));
                    int nv = d + m;
                    bool done = with_redraws(rng, any_point, [&](const QtPoint& pt) {
                        auto prod = restrict_to(p_mul(macdonald_Q_p(lam, pt), g_k_p(m, pt)), nv);
                        bool eq = pieri_expand(lam, m, 2, nv, pt) == prod;
                        t.expect(eq, lam.str() + " m=" + std::to_string(m) + " at " + point_str(pt));
                    });
                    if (!done) t.fail(lam.str() + ": no pole-free point");
                }
    return t.finish();
}

CheckResult check_dual_recursion(std::uint64_t seed) {
    Tally t(3, "dual recursion equals Gram-Schmidt P_lambda");
    for (int d = 1; d <= 6; ++d)
        for (const auto& lam : partitions_of(d, -1, 3))
            for (int draw = 0; draw < 5; ++draw) {
                auto rng = rng_for(seed, static_cast<std::uint64_t>(d * 1000 + draw));
                bool done = with_redraws(rng, any_point, [&](const QtPoint& pt) {
                    bool eq = dual_recursion_P(lam, d, pt) == macdonald_P_gramschmidt(lam, d, pt);
                    t.expect(eq, lam.str() + " at " + point_str(pt));
                });
                if (!done) t.fail(lam.str() + ": no pole-free point");
            }
    return t.finish();
}

CheckResult check_orthogonality(std::uint64_t seed) {
    Tally t(4, "corollary inverse pairs and reductions to Bressoud's pair");
    auto record = [&](const VerificationReport& rep) {
        std::string w = rep.name;
        if (!rep.witnesses.empty()) {
            const auto& x = rep.witnesses.front();
            w += " draw " + std::to_string(x.draw) + " " + x.relation + " value " + to_string(x.value);
        }
        t.expect(rep.passed(), w);
    };
    EntryFactory a = [](std::mt19937_64& g) {
        auto p = random_A_params(2, g);
        return EntryPair{[p](const MultiIndex& m, const MultiIndex& k) { return corollary_A_f(m, k, p); },
                         [p](const MultiIndex& k, const MultiIndex& l) { return corollary_A_g(k, l, p); }, "A"};
    };
    EntryFactory c = [](std::mt19937_64& g) {
        auto p = random_C_params(2, g);
        return EntryPair{[p](const MultiIndex& m, const MultiIndex& k) { return corollary_C_f(m, k, p); },
                         [p](const MultiIndex& k, const MultiIndex& l) { return corollary_C_g(k, l, p); }, "C"};
    };
    record(verify_orthogonality(a, 2, 3, 5, seed, "A-type corollary pair"));
    record(verify_orthogonality(c, 2, 3, 5, seed, "C-type corollary pair"));

    const int window = 5;
    for (int draw = 0; draw < 20; ++draw) {
        auto rng = rng_for(seed, static_cast<std::uint64_t>(50000 + draw));
        bool done = with_redraws(
            rng, [](std::mt19937_64& g) { return random_A_params(1, g); },
            [&](const AParams& p) {
                Rational a0 = p.t0 * p.u[0], b0 = a0 / p.t[0];
                bool eq = diagonally_equivalent(
                    [&](int m, int k) { return corollary_A_f({m}, {k}, p); },
                    [&](int k, int l) { return corollary_A_g({k}, {l}, p); },
                    [&](int m, int k) { return bressoud_f(m, k, a0, b0, p.q); },
                    [&](int k, int l) { return bressoud_g(k, l, a0, b0, p.q); }, window);
                t.expect(eq, "A-type n=1 vs Bressoud, draw " + std::to_string(draw));
            });
        if (!done) t.fail("A-type n=1: no pole-free draw");
        rng = rng_for(seed, static_cast<std::uint64_t>(60000 + draw));
        done = with_redraws(
            rng, [](std::mt19937_64& g) { return random_C_params(1, g); },
            [&](const CParams& p) {
                Rational a0 = p.a * p.u[0] * p.u[0], b0 = a0 / p.t[0];
                bool eq = diagonally_equivalent(
                    [&](int m, int k) { return corollary_C_f({m}, {k}, p); },
                    [&](int k, int l) { return corollary_C_g({k}, {l}, p); },
                    [&](int m, int k) { return bressoud_f(m, k, a0, b0, p.q); },
                    [&](int k, int l) { return bressoud_g(k, l, a0, b0, p.q); }, window);
                t.expect(eq, "C-type n=1 vs Bressoud, draw " + std::to_string(draw));
            });
        if (!done) t.fail("C-type n=1: no pole-free draw");
    }
    return t.finish();
}

CheckResult check_terminating_registry(std::uint64_t seed) {
    Tally t(5, "terminating identities of the registry");
    for (const char* id : {"6phi5-term", "8phi7-jackson"})
        for (int M = 0; M <= 4; ++M) add_report(t, check_identity(id, 1, {M}, 10, seed));
    for (const char* id : {"milne-fundamental", "an65", "an87"})
        for (int n = 1; n <= 3; ++n)
            for (int M = 0; M <= 4; ++M) add_report(t, check_identity(id, n, {M}, 10, seed));
    std::vector<std::vector<int>> boxes = all_boxes(1, 4);
    for (auto& b : all_boxes(2, 4)) boxes.push_back(b);
    for (auto b : {std::vector<int>{0, 0, 0}, {1, 1, 1}, {2, 1, 0}, {3, 2, 1}, {0, 4, 2}, {4, 4, 4}})
        boxes.push_back(b);
    for (const auto& b : boxes) add_report(t, check_identity("cn87", static_cast<int>(b.size()), b, 10, seed));
    return t.finish();
}

CheckResult check_new_identities(std::uint64_t seed) {
    Tally t(6, "new multivariable identities");
    for (int M = 0; M <= 3; ++M) {
        add_report(t, check_identity("an87n", 2, {M}, 10, seed));
        add_report(t, check_identity("an65n-new", 2, {M}, 10, seed));
    }
    for (const auto& b : all_boxes(2, 2)) add_report(t, check_identity("an87np", 2, b, 10, seed));
    TruncationPolicy pol;
    pol.target = 1e-15;
    for (int n = 1; n <= 2; ++n) {
        add_report(t, check_identity("an65nt-new", n, {}, 10, seed, pol));
    }
    return t.finish();
}

CheckResult check_conjecture(std::uint64_t seed) {
    Tally t(7, "C-type determinant 8phi7 (exact)");
    for (auto m : {std::vector<int>{1, 1}, {2, 1}, {2, 2}, {1, 1, 1}})
        add_report(t, check_identity("cn87n-conjecture", static_cast<int>(m.size()), m, 10, seed));
    return t.finish();
}

CheckResult check_bridge(std::uint64_t seed) {
    Tally t(8, "specialized Pieri and recursion displays");
    std::vector<std::vector<int>> lams;
    for (int d = 1; d <= 5; ++d)
        for (const auto& lam : partitions_of(d)) {
            auto p = lam.parts();
            if (p.size() >= 2) lams.push_back(p);
            p.push_back(0);
            lams.push_back(p);
        }
    for (const auto& lam : lams)
        for (int draw = 0; draw < 10; ++draw) {
            auto rng = rng_for(seed, static_cast<std::uint64_t>(70000 + draw));
            std::string name = Partition(lam).str() + (lam.back() == 0 ? ",0" : "");
            bool done = with_redraws(rng, any_point, [&](const QtPoint& pt) {
                Rational u = draw_rational(rng);
                if (special_u(u, pt)) throw SingularError("u is a monomial in q and t");
                auto b = bridge_check(lam, u, pt.q, pt.t);
                t.expect(b.all(), name + " u=" + to_string(u) + " at " + point_str(pt));
            });
            if (!done) t.fail(name + ": no pole-free point");
        }
    return t.finish();
}

CheckResult check_restricted_pieri(std::uint64_t seed) {
    Tally t(9, "Pieri formula in exactly n variables");
    const int n = 2;
    for (int d = 0; d <= 4; ++d)
        for (const auto& lam : partitions_of(d, n))
            for (int m = 1; m <= 3; ++m)
                for (int draw = 0; draw < 5; ++draw) {
                    auto rng = rng_for(seed, static_cast<std::uint64_t>(80000 + d * 1000 + m * 10 + draw));
                    std::string name = lam.str() + " m=" + std::to_string(m);
                    bool done = with_redraws(rng, any_point, [&](const QtPoint& pt) {
                        auto prod = restrict_to(p_mul(macdonald_Q_p(lam, pt), g_k_p(m, pt)), n);
                        t.expect(restricted_pieri(lam, m, n, pt) == prod, name + " at " + point_str(pt));
                        for (const auto& [term, poly] : restricted_pieri_dropped(lam, m, n, pt))
                            t.expect(poly.is_zero(), name + " term " + term.index.str() + " nonzero at " +
                                                         point_str(pt));
                    });
                    if (!done) t.fail(name + ": no pole-free point");
                }
    return t.finish();
}

CheckResult check_complex(std::uint64_t seed) {
    Tally t(10, "complex-part Macdonald functions");
    const unsigned prec = 192;
    PrecisionGuard guard(prec);
    auto positive_point = [](std::mt19937_64& g) {
        QtPoint pt;
        pt.q = uniform(g, 1, 4, 9);
        do pt.t = draw_rational(g);
        while (multiplicatively_dependent(pt.q, pt.t));
        return pt;
    };

    // integer order against exact g_m
    for (int draw = 0; draw < 5; ++draw) {
        auto rng = rng_for(seed, static_cast<std::uint64_t>(90000 + draw));
        for (int m = 0; m <= 4; ++m) {
            bool done = with_redraws(rng, positive_point, [&](const QtPoint& pt) {
                std::vector<Rational> x{draw_rational(rng), draw_rational(rng), draw_rational(rng)};
                ComplexEvalContext ctx;
                ctx.q = pt.q;
                ctx.t = pt.t;
                for (const auto& v : x) ctx.x.push_back(BigComplex(v));
                Rational exact = g_k(m, 3, pt).eval(x);
                BigFloat e = relative(g_complex(BigComplex(Rational(m)), ctx), BigComplex(exact));
                t.error(e);
                t.expect(e <= 1e-15, "g_" + std::to_string(m) + " at " + point_str(pt) + " rel " + big(e));
            });
            if (!done) t.fail("g_m: no pole-free point");
        }
    }

    // evaluation formula against eps-hat of Q_complex, and against exact eps_{u,t}
    std::vector<QtPoint> pts(1);
    pts[0].q = Rational(1, 2);
    pts[0].t = Rational(9, 10);
    for (int draw = 0; draw < 2; ++draw) {
        auto rng = rng_for(seed, static_cast<std::uint64_t>(91000 + draw));
        pts.push_back(positive_point(rng));
    }
    for (const auto& pt : pts)
        for (int d = 1; d <= 4; ++d)
            for (const auto& lam : partitions_of(d))
                for (int r1 = lam.length(); r1 <= lam.length() + 1; ++r1) {
                    std::string name = lam.str() + " r+1=" + std::to_string(r1) + " at " + point_str(pt);
                    try {
                        ComplexEvalContext ctx;
                        ctx.q = pt.q;
                        ctx.t = pt.t;
                        for (int i = r1 - 1; i >= 0; --i) ctx.x.push_back(BigComplex(qpow(pt.t, i)));
                        BigComplex spec = Q_complex(to_complex(lam.parts()), ctx);
                        BigComplex prod = evaluation_formula(to_complex(lam.parts()), BigComplex(qpow(pt.t, r1)), pt);
                        BigFloat e = relative(prod, spec);
                        t.error(e);
                        t.expect(e <= 1e-12, "evaluation " + name + " rel " + big(e));
                        Rational u = Rational(3, 4);
                        BigComplex exact(hyper_specialize_Q(lam, u, lam.length(), pt));
                        e = relative(evaluation_formula(to_complex(lam.parts()), BigComplex(u), pt), exact);
                        t.error(e);
                        t.expect(e <= 1e-12, "eps_{3/4,t} " + name + " rel " + big(e));
                    } catch (const MathError& ex) {
                        t.fail("evaluation " + name + ": " + ex.what());
                    }
                }

    // one-row duality inside the Heine domain
    QtPoint dp;
    dp.q = Rational(1, 4);
    dp.t = Rational(9, 10);
    TruncationPolicy tight;
    tight.target = 1e-18;
    for (int draw = 0; draw < 10; ++draw) {
        auto rng = rng_for(seed, static_cast<std::uint64_t>(92000 + draw));
        BigComplex c(uniform(rng, 2, 12, 20), uniform(rng, -6, 6, 20));
        BigComplex d(uniform(rng, 2, 12, 20), uniform(rng, -6, 6, 20));
        std::string name = "duality c=" + to_string(c, 6) + " d=" + to_string(d, 6);
        try {
            auto res = one_row_duality(c, d, dp, prec, tight);
            BigFloat e1 = relative(res.lhs, res.rhs), e2 = relative(res.heine, res.lhs);
            t.error(e1);
            t.error(e2);
            t.expect(e1 <= 1e-15, name + " rel " + big(e1));
            t.expect(e2 <= 1e-15, name + " Heine rel " + big(e2));
        } catch (const MathError& ex) {
            t.fail(name + ": " + ex.what());
        }
    }

    // zero padding
    {
        PrecisionGuard g2(256);
        TruncationPolicy deep;
        deep.target = 1e-25;
        ComplexEvalContext ctx;
        ctx.q = Rational(1, 2);
        ctx.t = Rational(1, 3);
        ctx.x = {BigComplex(1), BigComplex(Rational(1, 4))};
        ctx.precision = 256;
        ctx.truncation = deep;
        QtPoint pt;
        for (int draw = 0; draw < 3; ++draw) {
            auto rng = rng_for(seed, static_cast<std::uint64_t>(93000 + draw));
            BigComplex c = draw == 0 ? BigComplex(Rational(1, 2))
                                     : BigComplex(uniform(rng, 1, 19, 10), uniform(rng, -5, 5, 10));
            std::string name = "padding c=" + to_string(c, 6);
            try {
                ComplexPartition one{{c}}, two{{c, BigComplex(0)}}, three{{c, BigComplex(0), BigComplex(0)}};
                BigFloat e = relative(Q_complex(two, ctx), Q_complex(one, ctx));
                t.error(e);
                t.expect(e <= 1e-20, name + " Q rel " + big(e));
                BigComplex x(Rational(2, 3));
                e = relative(single_variable_formula(three, x, pt, 256), single_variable_formula(one, x, pt, 256));
                t.error(e);
                t.expect(e <= 1e-20, name + " single-variable rel " + big(e));
            } catch (const MathError& ex) {
                t.fail(name + ": " + ex.what());
            }
        }
    }

    // inductive step of the evaluation formula at n = 2
    for (int draw = 0; draw < 5; ++draw) {
        auto rng = rng_for(seed, static_cast<std::uint64_t>(94000 + draw));
        QtPoint pt;
        do {
            pt.q = uniform(rng, 1, 4, 9);
            pt.t = uniform(rng, 1, 4, 9) * (rng() % 2 ? 1 : -1);
        } while (multiplicatively_dependent(pt.q, pt.t));
        Rational l3 = uniform(rng, 1, 7, 8);
        Rational l2 = l3 + uniform(rng, 1, 11, 4);
        Rational l1 = l2 + uniform(rng, 1, 11, 4);
        ComplexPartition lam{{BigComplex(l1), BigComplex(l2), BigComplex(l3)}};
        std::string name = "inductive step (" + to_string(l1) + "," + to_string(l2) + "," + to_string(l3) +
                           ") at " + point_str(pt);
        try {
            auto st = inductive_step(lam, BigComplex(Rational(3, 4)), pt, prec, tight);
            BigFloat e1 = relative(st.recursion_sum, st.product);
            BigFloat e2 = relative(st.nonterminating.lhs.value, st.nonterminating.rhs);
            t.error(e1);
            t.error(e2);
            t.expect(e1 <= 1e-15 && e2 <= 1e-15, name + " rel " + big(e1) + " / " + big(e2));
        } catch (const MathError& ex) {
            t.fail(name + ": " + ex.what());
        }
    }
    return t.finish();
}

CheckResult check_degenerations(std::uint64_t seed) {
    Tally t(11, "6phi5 degeneration and n-independence of b_lambda");
    const auto& spec = find_identity("6phi5-nonterm");
    for (int draw = 0; draw < 10; ++draw) {
        auto rng = rng_for(seed, static_cast<std::uint64_t>(95000 + draw));
        int M = 1 + draw % 4;
        bool done = with_redraws(
            rng,
            [](std::mt19937_64& g) {
                IdParams p;
                p.q = uniform(g, 1, 4, 9);
                p.s["a"] = draw_rational(g);
                p.s["b"] = draw_rational(g);
                p.s["c"] = draw_rational(g);
                return p;
            },
            [&](IdParams p) {
                p.M = M;
                p.s["d"] = qpow(p.q, -M);
                auto exact = ids::six_phi_five(p.at("a"), p.at("b"), p.at("c"), M, p.q);
                TruncationPolicy pol;
                pol.fixed_shells = M;
                auto num = eval_nonterminating(spec, p, pol, 256);
                PrecisionGuard g(256);
                BigFloat e1 = relative(num.lhs.value, BigComplex(exact.lhs));
                BigFloat e2 = relative(num.rhs, BigComplex(exact.rhs));
                t.error(e1);
                t.error(e2);
                t.expect(e1 <= 1e-20 && e2 <= 1e-20,
                         "6phi5 at d=q^-" + std::to_string(M) + " rel " + big(e1) + " / " + big(e2));
            });
        if (!done) t.fail("6phi5 degeneration: no pole-free draw");
    }
    for (int d = 0; d <= 6; ++d)
        for (const auto& lam : partitions_of(d))
            for (int draw = 0; draw < 5; ++draw) {
                auto rng = rng_for(seed, static_cast<std::uint64_t>(96000 + d * 100 + draw));
                bool done = with_redraws(rng, any_point, [&](const QtPoint& pt) {
                    Rational ref = b_lambda(lam, pt, lam.length());
                    bool eq = ref == b_lambda_first(lam, pt) && ref == b_lambda_second(lam, pt);
                    for (int n = lam.length() + 1; n <= lam.length() + 3; ++n) eq = eq && b_lambda(lam, pt, n) == ref;
                    t.expect(eq, "b_" + lam.str() + " at " + point_str(pt));
                });
                if (!done) t.fail("b_" + lam.str() + ": no pole-free point");
            }
    return t.finish();
}

CheckResult run_criterion(int criterion, std::uint64_t seed) {
    static const std::vector<std::function<CheckResult(std::uint64_t)>> fns = {
        check_recursion_oracle, check_pieri,  check_dual_recursion, check_orthogonality,
        check_terminating_registry, check_new_identities, check_conjecture, check_bridge,
        check_restricted_pieri, check_complex, check_degenerations};
    if (criterion < 1 || criterion > static_cast<int>(fns.size()))
        throw std::invalid_argument("no criterion " + std::to_string(criterion));
    try {
        return fns[criterion - 1](seed);
    } catch (const std::exception& e) {
        CheckResult r;
        r.criterion = criterion;
        r.name = "criterion " + std::to_string(criterion);
        r.detail = std::string("aborted: ") + e.what();
        return r;
    }
}

bool SuiteResult::passed() const {
    if (checks.empty()) return false;
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"core", "appendix", "section4", "section5", "section7", "all"};
    return names;
}

std::vector<int> suite_criteria(const std::string& name) {
    if (name == "core") return {1, 2, 3, 9, 11};
    if (name == "appendix") return {4};
    if (name == "section4") return {5, 6, 7};
    if (name == "section5") return {8};
    if (name == "section7") return {10};
    if (name == "all") return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11};
    throw std::invalid_argument("unknown suite '" + name + "'");
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed) {
    SuiteResult s;
    s.name = name;
    s.seed = seed;
    for (int c : suite_criteria(name)) s.checks.push_back(run_criterion(c, seed));
    return s;
}

}  // namespace macd
