#include <doctest.h>

#include "macd/bigcomplex.hpp"
#include "macd/errors.hpp"
#include "macd/qkernel.hpp"
#include "macd/random.hpp"

using namespace macd;

TEST_CASE("finite q-Pochhammer symbols") {
    Rational a(1, 2), q(1, 3);
    CHECK(poch_int(a, q, 0) == 1);
    CHECK(poch_int(a, q, 2) == Rational(5, 12));
    CHECK(poch_int(a, q, -1) == -2);
    // (a;q)_{-1} (1 - a/q) = 1
    CHECK(poch_int(a, q, -1) * (1 - a / q) == 1);
    CHECK_THROWS_AS(poch_int(Rational(1, 3), q, -1), PoleError);
}

TEST_CASE("products of Pochhammer symbols") {
    Rational q(1, 3);
    CHECK(poch_multi({}, q, 4) == 1);
    CHECK(poch_multi({Rational(1, 2), Rational(1, 5)}, q, 1) == Rational(2, 5));
    for (int d = 0; d < 20; ++d) {
        auto rng = rng_for(3, d);
        Rational a = draw_rational(rng), qq = draw_rational(rng);
        int k = static_cast<int>(rng() % 5);
        CHECK(poch_multi({a}, qq, k) == poch_int(a, qq, k));
    }
}

TEST_CASE("rational parsing round trip") {
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-7") == -7);
    CHECK(to_string(parse_rational("-4/6")) == "-2/3");
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("abc"));
}

TEST_CASE("zero-tracked products") {
    Rational q(1, 2);
    ZeroTracked z;
    z.poch(Rational(1), q, 2).ipoch(Rational(1), q, 1);  // (1;q)_2/(1;q)_1 = 1 - q
    CHECK(z.value() == Rational(1, 2));
    ZeroTracked p;
    p.ipoch(q, q, -1);  // 1/(q;q)_{-1} = 0
    CHECK(p.value() == 0);
    ZeroTracked bad;
    bad.div(Rational(0));
    CHECK_THROWS_AS(bad.value(), PoleError);
}

TEST_CASE("complex-order Pochhammer symbols") {
    PrecisionGuard g(192);
    BigComplex a(Rational(1, 2));
    Rational q(1, 3);
    CHECK(rel_err(poch_complex(a, q, BigComplex(0), 192), BigComplex(1)) == 0);
    CHECK(rel_err(poch_complex(a, q, BigComplex(2), 192), BigComplex(Rational(5, 12))) < 1e-20);
    // (1/2;1/2)_{1/2}: truncated products at depths 150 and 300 agree to 1e-46
    BigComplex v = poch_complex(a, Rational(1, 2), BigComplex(Rational(1, 2)), 256);
    CHECK(rel_err(v, BigComplex(BigFloat("0.6511572755150400929133282334168056344184"))) < 1e-25);
}

TEST_CASE("q,t-powers") {
    PrecisionGuard g(192);
    Rational q(1, 2), t(1, 3);
    BigComplex x(Rational(2, 5), Rational(1, 7));
    CHECK(rel_err(qt_power(x, BigComplex(0), q, t, 192), BigComplex(1)) < 1e-40);
    CHECK(rel_err(qt_power(x, BigComplex(3), q, t, 192), ipow(x, 3)) < 1e-20);
    BigComplex half(Rational(1, 2));
    BigComplex a = qt_power(x, half, q, t, 192), b = qt_power(x, half + BigComplex(1), q, t, 192);
    CHECK(rel_err(b, a * x) < 1e-20);
}

TEST_CASE("random points avoid multiplicative dependence") {
    for (int d = 0; d < 50; ++d) {
        auto rng = rng_for(11, d);
        auto pt = draw_qt_point(rng);
        CHECK_FALSE(multiplicatively_dependent(pt.q, pt.t));
        CHECK(abs(pt.q) != 1);
    }
    CHECK(multiplicatively_dependent(Rational(1, 9), Rational(1, 3)));
    auto a = rng_for(5, 2), b = rng_for(5, 2);
    CHECK(draw_rational(a) == draw_rational(b));
}
