#include <doctest.h>

#include "macd/errors.hpp"
#include "macd/hyperseries.hpp"
#include "macd/random.hpp"

using namespace macd;

namespace {

bool passes(const std::string& id, int n, std::vector<int> sizes, int draws, std::uint64_t seed) {
    auto rep = check_identity(id, n, sizes, draws, seed);
    for (const auto& r : rep.records)
        if (r.status != "PASS") MESSAGE(id << " draw " << r.draw << ": " << r.status << " " << r.message);
    return rep.passed();
}

}  // namespace

TEST_CASE("registry contents") {
    for (const char* id : {"q-binomial", "q-gauss", "6phi5-term", "6phi5-nonterm", "8phi7-jackson", "milne-fundamental",
                           "an-qbinomial", "an65", "annt65", "annt21", "an87", "cn87", "an87n", "an87np",
                           "an65nt-new", "an65n-new", "cn87n-conjecture", "pieri-specialized",
                           "recursion-specialized"})
        CHECK(find_identity(id).id == id);
    CHECK_THROWS_AS(find_identity("nonesuch"), std::out_of_range);
}

TEST_CASE("terminating sums at M = 0 reduce to one term") {
    IdParams p;
    p.q = Rational(2, 7);
    p.n = 2;
    p.M = 0;
    p.s = {{"a", Rational(3, 5)}, {"b", Rational(-4, 3)}};
    p.v = {{"c", {Rational(1, 3), Rational(5, 2)}}, {"u", {Rational(2, 9), Rational(-7, 4)}}};
    const auto& spec = find_identity("an65");
    CHECK(region_points(spec, p).size() == 1);
    auto r = eval_terminating(spec, p);
    CHECK(r.lhs == 1);
    CHECK(r.lhs == r.rhs);
}

TEST_CASE("classical and multivariable terminating identities") {
    CHECK(passes("6phi5-term", 1, {3}, 5, 1));
    CHECK(passes("8phi7-jackson", 1, {3}, 5, 1));
    CHECK(passes("milne-fundamental", 2, {3}, 5, 1));
    for (int M = 0; M <= 3; ++M) CHECK(passes("an65", 2, {M}, 10, 7));
    CHECK(passes("an65", 1, {3}, 5, 1));
    CHECK(passes("an87", 2, {2}, 5, 1));
    CHECK(passes("cn87", 2, {2, 1}, 5, 1));
    CHECK(passes("an87n", 2, {2}, 10, 1));
    CHECK(passes("an87np", 2, {1, 2}, 5, 1));
    CHECK(passes("an65n-new", 3, {2}, 5, 1));
    CHECK(passes("cn87n-conjecture", 2, {2, 1}, 10, 1));
}

TEST_CASE("the literal determinant exponent of the C-type 8phi7 fails for n = 2") {
    auto rng = rng_for(1, 0);
    bool any_fail = false;
    for (int d = 0; d < 5 && !any_fail; ++d) {
        IdParams p;
        p.q = Rational(2, 7);
        p.n = 2;
        p.m = {2, 1};
        p.s = {{"a", draw_rational(rng)}, {"b", draw_rational(rng)}, {"c", draw_rational(rng)}, {"d", draw_rational(rng)}};
        p.v = {{"u", {draw_rational(rng), draw_rational(rng)}}};
        try {
            auto r = ids::cn87n_literal(p);
            any_fail = r.lhs != r.rhs;
        } catch (const MathError&) {
        }
    }
    CHECK(any_fail);
}

TEST_CASE("nonterminating identities") {
    TruncationPolicy pol;
    CHECK(passes("q-binomial", 1, {}, 5, 1));
    CHECK(passes("q-gauss", 1, {}, 5, 1));
    CHECK(passes("6phi5-nonterm", 1, {}, 5, 1));
    CHECK(passes("an-qbinomial", 2, {}, 5, 1));
    CHECK(passes("annt65", 2, {}, 3, 1));
    CHECK(passes("annt21", 2, {}, 3, 1));
    CHECK(passes("an65nt-new", 2, {}, 3, 1));

    IdParams p;
    p.q = Rational(1, 3);
    p.n = 2;
    p.s = {{"z", Rational(1, 4)}};
    p.v = {{"a", {Rational(2, 5), Rational(-3, 7)}}, {"u", {Rational(1, 2), Rational(5, 3)}}};
    auto r = eval_nonterminating(find_identity("an-qbinomial"), p, pol);
    PrecisionGuard g(192);
    CHECK(rel_err(r.lhs.value, r.rhs) <= 1e-15);
    CHECK(r.agrees(1e-15));
}

TEST_CASE("truncation policy") {
    TruncationPolicy bad;
    bad.target = 0;
    CHECK_THROWS(bad.validate());
    PrecisionGuard g(192);
    // sum_k 2^-k over N
    auto term = [](const MultiIndex& k) { return BigComplex(qpow(Rational(1, 2), k[0])); };
    TruncationPolicy pol;
    int shells = 0;
    auto e = sum_shells(1, term, pol, &shells);
    CHECK(rel_err(e.value, BigComplex(2)) <= 1e-15);
    CHECK(shells > 40);
    TruncationPolicy fixed;
    fixed.fixed_shells = 2;
    CHECK(rel_err(sum_shells(1, term, fixed).value, BigComplex(Rational(7, 4))) == 0);
    TruncationPolicy tiny;
    tiny.max_shell = 5;
    CHECK_THROWS_AS(sum_shells(1, term, tiny), ConvergenceError);
    auto div = [](const MultiIndex& k) { return BigComplex(Rational(k[0] + 1)); };
    CHECK_THROWS_AS(sum_shells(1, div, tiny), ConvergenceError);
}

TEST_CASE("6phi5 degeneration and the Jackson limit") {
    PrecisionGuard g(256);
    Rational q(1, 3), a(2, 5), b(-3, 7), c(4, 9);
    for (int M = 1; M <= 4; ++M) {
        IdParams p;
        p.q = q;
        p.M = M;
        p.s = {{"a", a}, {"b", b}, {"c", c}, {"d", qpow(q, -M)}};
        TruncationPolicy pol;
        pol.fixed_shells = M;
        auto num = eval_nonterminating(find_identity("6phi5-nonterm"), p, pol, 256);
        auto ex = ids::six_phi_five(a, b, c, M, q);
        CHECK(rel_err(num.lhs.value, BigComplex(ex.lhs)) <= 1e-20);
        CHECK(rel_err(num.rhs, BigComplex(ex.rhs)) <= 1e-20);
    }
    // Jackson's 8phi7 with d fixed tends to the nonterminating 6phi5 as M grows
    IdParams p;
    p.q = Rational(1, 2);
    p.s = {{"a", Rational(1, 3)}, {"b", Rational(2, 5)}, {"c", Rational(-3, 4)}, {"d", Rational(5, 7)}};
    auto nt = eval_nonterminating(find_identity("6phi5-nonterm"), p, TruncationPolicy{}, 256);
    BigFloat prev = 1;
    for (int M : {10, 14, 18}) {
        auto j = ids::jackson(p.at("a"), p.at("b"), p.at("c"), p.at("d"), M, p.q);
        BigFloat gap = rel_err(BigComplex(j.rhs), nt.rhs);
        CHECK(gap < prev);
        prev = gap;
    }
    CHECK(prev < 1e-5);
}

TEST_CASE("specialized displays and the registered sums") {
    for (auto lam : {std::vector<int>{1, 1}, {2, 1}, {3, 2}, {2, 1, 1}, {2, 0}, {1, 1, 0}}) {
        auto b = bridge_check(lam, Rational(5, 4), Rational(2, 7), Rational(-3, 5));
        CHECK(b.pieri_sum);
        CHECK(b.pieri_lhs);
        CHECK(b.pieri_rhs);
        CHECK(b.recursion_sum);
        CHECK(b.recursion_lhs);
        CHECK(b.recursion_rhs);
        CHECK(b.pieri_registered);
        CHECK(b.recursion_registered);
    }
    CHECK(passes("pieri-specialized", 1, {2, 1}, 5, 1));
    CHECK(passes("recursion-specialized", 2, {2, 1, 1}, 5, 1));
}

TEST_CASE("reports are reproducible") {
    auto a = check_identity("an87", 2, {2}, 3, 99), b = check_identity("an87", 2, {2}, 3, 99);
    REQUIRE(a.records.size() == b.records.size());
    for (size_t i = 0; i < a.records.size(); ++i) {
        CHECK(a.records[i].params == b.records[i].params);
        CHECK(a.records[i].lhs == b.records[i].lhs);
    }
}
