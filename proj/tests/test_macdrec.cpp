#include <doctest.h>

#include "macd/errors.hpp"
#include "macd/macdrec.hpp"
#include "macd/random.hpp"
#include "macd/symfun.hpp"

using namespace macd;

namespace {

Rational det2(Rational a, Rational b, Rational c, Rational d) { return a * d - b * c; }

// the determinant display for n = 2, evaluated entry by entry
Rational recursion_coeff_n2(int th1, int th2, Rational u1, Rational u2, const QtPoint& pt) {
    const Rational &q = pt.q, &t = pt.t;
    auto P = [&](Rational a, int k) { return poch_int(a, q, k); };
    Rational r = 1;
    int th[2] = {th1, th2};
    Rational u[2] = {u1, u2};
    for (int i = 0; i < 2; ++i)
        r *= qpow(t, th[i]) * P(q / t, th[i]) * P(q * u[i], th[i]) / (P(q, th[i]) * P(q * t * u[i], th[i]));
    Rational x = u1 / u2;
    r *= P(q * x / t, th1) * P(qpow(q, -th2) * t * x, th1) / (P(q * x, th1) * P(qpow(q, -th2) * x, th1));
    Rational x1 = qpow(q, th1) * u1, x2 = qpow(q, th2) * u2;
    auto F = [&](Rational xi, int thi) -> Rational {
        if (thi == 0) return 0;
        return (1 - t * xi) / (1 - xi) * (u1 - xi) / (t * u1 - xi) * (u2 - xi) / (t * u2 - xi);
    };
    Rational f1 = F(x1, th1), f2 = F(x2, th2);
    return r * det2(x1 * (1 - f1), 1 - t * f1, x2 * (1 - f2), 1 - t * f2) / (x1 - x2);
}

}  // namespace

TEST_CASE("Pieri coefficients") {
    QtPoint pt;
    CHECK(pieri_coeff({0, 0}, {Rational(2, 3), Rational(5, 7)}, pt) == 1);
    Rational q = pt.q, t = pt.t, u1(2, 3), u2(5, 7);
    Rational expected = (1 - t) * (1 - q * q * q * u1) / ((1 - q) * (1 - q * q * t * u1)) * (1 - t) *
                        (1 - q * q * q * u2) / ((1 - q) * (1 - q * q * t * u2)) * (1 - t * u1 / u2) *
                        (1 - u1 / (t * u2)) / ((1 - q * u1 / u2) * (1 - u1 / (q * u2)));
    CHECK(expected == Rational(9207, 2054));
    CHECK(pieri_coeff({1, 1}, {u1, u2}, pt) == Rational(9207, 2054));
}

TEST_CASE("recursion coefficients") {
    QtPoint pt;
    CHECK(recursion_coeff({0}, {Rational(3, 5)}, pt) == 1);
    CHECK(recursion_coeff_one(0, Rational(3, 5), pt) == 1);
    // u from lambda = (2,1,0)
    std::vector<Rational> u = {pt.q * pt.q * pt.t, pt.q};
    CHECK(recursion_coeff_n2(1, 0, u[0], u[1], pt) == Rational(-4794, 3905));
    CHECK(recursion_coeff({1, 0}, u, pt) == Rational(-4794, 3905));
    for (int d = 0; d < 10; ++d) {
        auto rng = rng_for(41, d);
        auto p = draw_qt_point(rng);
        Rational a = draw_rational(rng), b = draw_rational(rng);
        for (int th = 0; th <= 3; ++th) {
            try {
                CHECK(recursion_coeff({th}, {a}, p) == recursion_coeff_one(th, a, p));
                CHECK(recursion_coeff({th, 1}, {a, b}, p) == recursion_coeff_n2(th, 1, a, b, p));
            } catch (const PoleError&) {
            }
        }
    }
}

TEST_CASE("Pieri expansion") {
    QtPoint pt;
    CHECK(pieri_expand(Partition{}, 2, 1, 3, pt) == macdonald_Q(Partition{2}, 3, pt));
    CHECK(pieri_expand(Partition{1}, 1, 1, 3, pt) == g_k(1, 3, pt) * g_k(1, 3, pt));
    for (int d = 0; d < 5; ++d) {
        auto rng = rng_for(42, d);
        auto p = draw_qt_point(rng);
        auto prod = restrict_to(p_mul(macdonald_Q_p(Partition{2, 1}, p), g_k_p(2, p)), 5);
        CHECK(pieri_expand(Partition{2, 1}, 2, 2, 5, p) == prod);
    }
}

TEST_CASE("recursion and dual recursion against Gram-Schmidt") {
    QtPoint pt;
    CHECK(recursion_Q(Partition{3}, 2, pt) == g_k(3, 2, pt));
    CHECK(dual_recursion_P(Partition{1, 1, 1}, 3, pt) == elementary(3, 3));
    for (int d = 0; d < 5; ++d) {
        auto rng = rng_for(43, d);
        auto p = draw_qt_point(rng);
        CHECK(recursion_Q(Partition{2, 1}, 3, p) == macdonald_Q(Partition{2, 1}, 3, p));
        CHECK(dual_recursion_P(Partition{2, 1}, 3, p) == macdonald_P_gramschmidt(Partition{2, 1}, 3, p));
    }
    CHECK(dual_recursion_P(Partition{2, 2, 1}, 5, pt) == macdonald_P_gramschmidt(Partition{2, 2, 1}, 5, pt));
    CHECK(pieri_product_Q(Partition{3, 2, 1}, 6, pt) == macdonald_Q(Partition{3, 2, 1}, 6, pt));
}

TEST_CASE("Pieri formula in exactly n variables") {
    QtPoint pt;
    for (auto [lam, m] : {std::pair{Partition{1}, 1}, {Partition{2}, 2}, {Partition{2, 1}, 3}}) {
        auto prod = restrict_to(p_mul(macdonald_Q_p(lam, pt), g_k_p(m, pt)), 2);
        CHECK(restricted_pieri(lam, m, 2, pt) == prod);
        for (const auto& [term, poly] : restricted_pieri_dropped(lam, m, 2, pt)) CHECK(poly.is_zero());
    }
}
