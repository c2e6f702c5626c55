#include <doctest.h>

#include "macd/partitions.hpp"
#include "macd/random.hpp"

using namespace macd;

TEST_CASE("partition basics") {
    Partition p{3, 1, 0};
    CHECK(p.length() == 2);
    CHECK(p.size() == 4);
    CHECK(p.str() == "3,1");
    CHECK(Partition::parse("") == Partition{});
    CHECK(Partition::parse("2,2,1").length() == 3);
    CHECK_THROWS(Partition::parse("1,2"));
    CHECK(Partition::is_partition({2, 2, 0}));
    CHECK_FALSE(Partition::is_partition({1, 2}));
}

TEST_CASE("conjugate partitions") {
    CHECK(conjugate(Partition{}) == Partition{});
    CHECK(conjugate(Partition{3, 1}) == Partition{2, 1, 1});
    for (int n = 0; n <= 8; ++n)
        for (const auto& l : partitions_of(n)) CHECK(conjugate(conjugate(l)) == l);
}

TEST_CASE("z_lambda") {
    CHECK(z_lambda(Partition{}) == 1);
    CHECK(z_lambda(Partition{2, 1}) == 2);
    CHECK(z_lambda(Partition{2, 2, 1, 1, 1}) == 48);
}

TEST_CASE("partition enumeration") {
    CHECK(partitions_of(5).size() == 7);
    CHECK(partitions_of(6, 3).size() == 7);
    CHECK(partitions_of(6, -1, 3).size() == 7);
    CHECK(partitions_of(0).size() == 1);
    CHECK(dominates(Partition{3, 1}, Partition{2, 2}));
    CHECK_FALSE(dominates(Partition{2, 2}, Partition{3, 1}));
}

TEST_CASE("b_lambda forms agree and do not depend on n") {
    QtPoint pt;
    CHECK(b_lambda(Partition{}, pt, 0) == 1);
    CHECK(b_lambda(Partition{1}, pt, 1) == Rational(4, 3));
    for (int d = 0; d < 10; ++d) {
        auto rng = rng_for(21, d);
        auto p = draw_qt_point(rng);
        Partition l{2, 1};
        CHECK(b_lambda(l, p, 2) == b_lambda(l, p, 3));
        CHECK(b_lambda(l, p, 2) == b_lambda_first(l, p));
        CHECK(b_lambda(l, p, 2) == b_lambda_second(l, p));
    }
}
