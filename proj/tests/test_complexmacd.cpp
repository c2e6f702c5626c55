#include <doctest.h>

#include "macd/complexmacd.hpp"
#include "macd/errors.hpp"
#include "macd/macdrec.hpp"
#include "macd/symfun.hpp"

using namespace macd;

namespace {

ComplexEvalContext context(std::vector<Rational> x, Rational q = Rational(1, 2), Rational t = Rational(1, 3)) {
    ComplexEvalContext c;
    c.q = q;
    c.t = t;
    for (const auto& v : x) c.x.push_back(BigComplex(v));
    return c;
}

ComplexPartition cp(std::vector<BigComplex> parts) { return ComplexPartition{std::move(parts)}; }

BigComplex R(long a, long b = 1) { return BigComplex(Rational(a, b)); }

}  // namespace

TEST_CASE("one-row functions at integer order") {
    PrecisionGuard g(192);
    std::vector<Rational> x = {Rational(1), Rational(1, 4), Rational(-2, 3)};
    auto ctx = context(x);
    QtPoint pt;
    for (int m = 0; m <= 4; ++m) {
        Rational exact = g_k(m, 3, pt).eval(x);
        CHECK(rel_err(g_complex(R(m), ctx), BigComplex(exact)) <= 1e-15);
    }
    CHECK(abs(g_complex(R(-2), context({Rational(1), Rational(1, 4)}))) == 0);
}

TEST_CASE("one-row function without further variables is the prefactor") {
    PrecisionGuard g(192);
    auto ctx = context({Rational(3, 5)});
    BigComplex c(Rational(1, 3), Rational(1, 5));
    BigComplex x0(Rational(3, 5)), T(ctx.t), Q(ctx.q);
    BigComplex pre = poch_complex(T * x0, ctx.q, c, 192) / poch_complex(Q, ctx.q, c, 192) *
                     poch_complex(Q / (T * x0), ctx.q, -c, 192) / poch_complex(Q / T, ctx.q, -c, 192);
    CHECK(rel_err(g_complex(c, ctx), pre) <= 1e-30);
}

TEST_CASE("one-row function at c = 1/2") {
    PrecisionGuard g(256);
    auto ctx = context({Rational(1), Rational(1, 4)});
    ctx.precision = 256;
    ctx.truncation.target = 1e-25;
    BigComplex a = g_complex(R(1, 2), ctx);
    ctx.truncation.target = 1e-30;
    BigComplex b = g_complex(R(1, 2), ctx);
    CHECK(rel_err(a, b) <= 1e-20);
    CHECK(rel_err(b, BigComplex(BigFloat("0.56522466204228805612713765703704670280089"))) <= 1e-20);
}

TEST_CASE("errors of the one-row function") {
    PrecisionGuard g(192);
    auto same = context({Rational(1), Rational(1, 4)}, Rational(1, 2), Rational(1, 2));
    CHECK_THROWS_AS(g_complex(R(1, 2), same), PoleError);
    auto far = context({Rational(1), Rational(3)});
    CHECK_THROWS_AS(g_complex(R(1, 2), far), ConvergenceError);
    auto ctx = context({Rational(1), Rational(1, 4)});
    ctx.q = Rational(3, 2);
    CHECK_THROWS(g_complex(R(1, 2), ctx));
}

TEST_CASE("complex-part Q at ordinary partitions") {
    PrecisionGuard g(192);
    std::vector<Rational> x = {Rational(1), Rational(1, 4), Rational(1, 16)};
    auto ctx = context(x);
    QtPoint pt;
    for (auto lam : {Partition{2, 1}, Partition{1, 1}, Partition{2, 2, 1}, Partition{3, 1}}) {
        std::vector<BigComplex> parts;
        for (int v : lam.parts()) parts.push_back(R(v));
        Rational exact = recursion_Q(lam, 3, pt).eval(x);
        CHECK(rel_err(Q_complex(cp(parts), ctx), BigComplex(exact)) <= 1e-12);
    }
    CHECK(rel_err(Q_complex(cp({R(1, 2)}), context({Rational(1), Rational(1, 4)})),
                  g_complex(R(1, 2), context({Rational(1), Rational(1, 4)}))) == 0);
}

TEST_CASE("zero padding") {
    PrecisionGuard g(256);
    auto ctx = context({Rational(1), Rational(1, 4)});
    ctx.precision = 256;
    ctx.truncation.target = 1e-25;
    CHECK(rel_err(Q_complex(cp({R(1, 2), R(0)}), ctx), Q_complex(cp({R(1, 2)}), ctx)) <= 1e-20);
    QtPoint pt;
    BigComplex x(Rational(2, 3));
    CHECK(rel_err(single_variable_formula(cp({R(1, 2), R(0), R(0)}), x, pt, 256),
                  single_variable_formula(cp({R(1, 2)}), x, pt, 256)) <= 1e-20);
}

TEST_CASE("evaluation formula") {
    PrecisionGuard g(192);
    QtPoint pt;
    CHECK(rel_err(evaluation_formula(cp({}), R(3, 4), pt), BigComplex(1)) == 0);
    BigComplex u = R(3, 4), c = R(1, 2);
    BigComplex n1 = poch_complex(u, pt.q, c, 192) / poch_complex(BigComplex(pt.q), pt.q, c, 192);
    CHECK(rel_err(evaluation_formula(cp({c}), u, pt), n1) <= 1e-30);
    for (auto lam : {Partition{2, 1}, Partition{1, 1, 1}, Partition{3, 1}, Partition{2, 2}}) {
        std::vector<BigComplex> parts;
        for (int v : lam.parts()) parts.push_back(R(v));
        Rational h = hyper_specialize_Q(lam, Rational(5, 4), lam.length(), pt);
        CHECK(rel_err(evaluation_formula(cp(parts), R(5, 4), pt), BigComplex(h)) <= 1e-30);
        // eps_{t^{r+1},t} is evaluation at (t^r, ..., t, 1)
        int r1 = lam.length() + 1;
        ComplexEvalContext ctx = context({});
        for (int i = r1 - 1; i >= 0; --i) ctx.x.push_back(BigComplex(qpow(pt.t, i)));
        CHECK(rel_err(evaluation_formula(cp(parts), BigComplex(qpow(pt.t, r1)), pt), Q_complex(cp(parts), ctx)) <=
              1e-12);
    }
}

TEST_CASE("single-variable formula") {
    PrecisionGuard g(192);
    QtPoint pt;
    Rational x(2, 3);
    for (int m = 0; m <= 4; ++m) {
        Rational expected = poch_int(pt.t, pt.q, m) / poch_int(pt.q, pt.q, m) * qpow(x, m);
        CHECK(rel_err(single_variable_formula(cp({R(m), R(0)}), BigComplex(x), pt), BigComplex(expected)) <= 1e-30);
        if (m >= 1) CHECK(abs(single_variable_formula(cp({R(m), R(1)}), BigComplex(x), pt)) == 0);
    }
}

TEST_CASE("one-row duality") {
    PrecisionGuard g(192);
    QtPoint pt;
    pt.q = Rational(1, 4);
    pt.t = Rational(9, 10);
    TruncationPolicy pol;
    pol.target = 1e-18;
    auto d = one_row_duality(BigComplex(Rational(3, 10), Rational(1, 5)), R(1, 2), pt, 192, pol);
    CHECK(rel_err(d.lhs, d.rhs) <= 1e-15);
    CHECK(rel_err(d.heine, d.lhs) <= 1e-15);
    auto same = one_row_duality(R(2, 5), R(2, 5), pt, 192, pol);
    CHECK(rel_err(same.lhs, same.rhs) == 0);
    QtPoint ip;
    ip.q = Rational(1, 2);
    ip.t = Rational(9, 10);
    auto ints = one_row_duality(R(2), R(3), ip, 192, pol);
    CHECK(rel_err(ints.heine, ints.lhs) <= 1e-15);
    CHECK(rel_err(ints.lhs, ints.rhs) <= 1e-15);
    QtPoint outside;
    outside.q = Rational(1, 2);
    outside.t = Rational(1, 4);
    CHECK_THROWS_AS(one_row_duality(R(1, 3), R(2, 5), outside), ConvergenceError);
}

TEST_CASE("inductive step of the evaluation formula") {
    PrecisionGuard g(192);
    QtPoint pt;
    TruncationPolicy pol;
    pol.target = 1e-18;
    auto st = inductive_step(cp({R(7, 3), R(1, 2)}), R(3, 4), pt, 192, pol);
    CHECK(rel_err(st.recursion_sum, st.product) <= 1e-15);
    CHECK(rel_err(st.nonterminating.lhs.value, st.nonterminating.rhs) <= 1e-15);
    auto st2 = inductive_step(cp({R(13, 4), R(3, 2), R(1, 4)}), R(3, 4), pt, 192, pol);
    CHECK(rel_err(st2.recursion_sum, st2.product) <= 1e-15);
    CHECK(rel_err(st2.nonterminating.lhs.value, st2.nonterminating.rhs) <= 1e-15);
}

TEST_CASE("complex recursion coefficients at real u match the exact ones") {
    PrecisionGuard g(192);
    QtPoint pt;
    std::vector<Rational> u = {Rational(2, 7), Rational(-5, 3)};
    for (auto th : {MultiIndex{0, 0}, MultiIndex{1, 0}, MultiIndex{2, 1}, MultiIndex{0, 3}})
        CHECK(rel_err(recursion_coeff_complex(th, {BigComplex(u[0]), BigComplex(u[1])}, pt.q, pt.t),
                      BigComplex(recursion_coeff(th, u, pt))) <= 1e-40);
}
