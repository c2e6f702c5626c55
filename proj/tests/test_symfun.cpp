#include <doctest.h>

#include "macd/random.hpp"
#include "macd/symfun.hpp"

using namespace macd;

namespace {

SymPoly x_power_sum(std::vector<std::pair<Exponent, Rational>> terms, int nvars) {
    SymPoly p(nvars);
    for (auto& [e, c] : terms) p.add_term(e, c);
    return p;
}

}  // namespace

TEST_CASE("monomial and classical bases") {
    CHECK(monomial_sym(Partition{1}, 2) == x_power_sum({{{1, 0}, 1}, {{0, 1}, 1}}, 2));
    CHECK(monomial_sym(Partition{2, 1}, 2) == x_power_sum({{{2, 1}, 1}, {{1, 2}, 1}}, 2));
    CHECK(elementary(2, 3) == monomial_sym(Partition{1, 1}, 3));
    CHECK(complete(2, 2) == monomial_sym(Partition{2}, 2) + monomial_sym(Partition{1, 1}, 2));
    CHECK(powersum(3, 2) == monomial_sym(Partition{3}, 2));
    CHECK(monomial_sym(Partition{1, 1, 1}, 2, true).is_zero());
    CHECK_THROWS(monomial_sym(Partition{1, 1, 1}, 2));
}

TEST_CASE("g_k generating function") {
    QtPoint pt;
    CHECK(g_k(0, 2, pt) == SymPoly::constant(2, 1));
    auto g1 = g_k(1, 2, pt);
    CHECK(g1 == monomial_sym(Partition{1}, 2) * ((1 - pt.t) / (1 - pt.q)));
}

TEST_CASE("power-sum expansions") {
    auto p2 = to_powersum(powersum(2, 3));
    CHECK(p2.coeffs.size() == 1);
    CHECK(p2.coeffs.at(Partition{2}) == 1);
    auto e2 = to_powersum(elementary(2, 3));
    CHECK(e2.coeffs.at(Partition{1, 1}) == Rational(1, 2));
    CHECK(e2.coeffs.at(Partition{2}) == Rational(-1, 2));
    CHECK(from_powersum(e2, 3) == elementary(2, 3));
}

TEST_CASE("Macdonald polynomials by Gram-Schmidt") {
    for (int d = 0; d < 3; ++d) {
        auto rng = rng_for(31, d);
        auto pt = draw_qt_point(rng);
        CHECK(macdonald_P_gramschmidt(Partition{1}, 3, pt) == monomial_sym(Partition{1}, 3));
        for (int k = 1; k <= 4; ++k) {
            std::vector<int> ones(k, 1);
            Partition col(ones);
            CHECK(macdonald_P_gramschmidt(col, 4, pt) == elementary(k, 4));
            CHECK(macdonald_P_gramschmidt(Partition{k}, 4, pt) ==
                  g_k(k, 4, pt) * (poch_int(pt.q, pt.q, k) / poch_int(pt.t, pt.q, k)));
            CHECK(macdonald_Q(Partition{k}, 4, pt) == g_k(k, 4, pt));
            CHECK(macdonald_Q(col, 4, pt) == elementary(k, 4) * (poch_int(pt.t, pt.t, k) / poch_int(pt.q, pt.t, k)));
        }
    }
}

TEST_CASE("Q_(2,1) in three variables at q=1/2, t=1/3") {
    QtPoint pt;
    auto Q = macdonald_Q(Partition{2, 1}, 3, pt);
    CHECK(Q == monomial_sym(Partition{2, 1}, 3) * Rational(544, 297) +
                   monomial_sym(Partition{1, 1, 1}, 3) * Rational(1216, 297));
    CHECK(Q.is_symmetric());
}

TEST_CASE("orthogonality of the P basis") {
    QtPoint pt;
    auto a = macdonald_P_p(Partition{2, 1}, pt), b = macdonald_P_p(Partition{3}, pt);
    CHECK(scalar_product(a, b, pt) == 0);
    CHECK(scalar_product(a, macdonald_Q_p(Partition{2, 1}, pt), pt) == 1);
}

TEST_CASE("specializations") {
    QtPoint pt;
    CHECK(principal_specialize(Partition{}, 3, pt) == 1);
    auto P = macdonald_P_gramschmidt(Partition{2, 1}, 3, pt);
    CHECK(principal_specialize(Partition{2, 1}, 3, pt) == P.eval({1, pt.t, pt.t * pt.t}));
    // eps_{t^N,t} is evaluation at (1, t, ..., t^{N-1})
    CHECK(hyper_specialize_P(Partition{2, 1}, pt.t * pt.t * pt.t, 2, pt) == P.eval({1, pt.t, pt.t * pt.t}));
    CHECK(hyper_specialize_Q(Partition{2, 1}, Rational(5, 4), 2, pt) ==
          hyper_specialize_Q(Partition{2, 1}, Rational(5, 4), 4, pt));
}
