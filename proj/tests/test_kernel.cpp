#include <doctest.h>

#include "macd/kernel.hpp"
#include "macd/qkernel.hpp"

using namespace macd;

TEST_CASE("multi-index helpers") {
    CHECK(total({1, 2, 3}) == 6);
    CHECK(geq({2, 1}, {1, 1}));
    CHECK_FALSE(geq({2, 0}, {1, 1}));
    CHECK(box({0, 0}, {1, 2}).size() == 6);
    CHECK(box({0, 0}, {1, 2}).back() == MultiIndex{1, 2});
    CHECK(compositions_upto(2, 2).size() == 6);
    CHECK(compositions_upto(3, 2, true).size() == 6);
    CHECK(compositions_upto(0, 3).size() == 1);
}

TEST_CASE("serial and parallel region sums agree") {
    RegionTerm term = [](const MultiIndex& k) -> Rational {
        Rational r(1);
        for (size_t i = 0; i < k.size(); ++i) r *= Rational(k[i] + 1, static_cast<long>(i) + 2 + k[i] * k[i]);
        return r;
    };
    for (auto hi : {MultiIndex{7}, MultiIndex{3, 4}, MultiIndex{2, 3, 4}, MultiIndex{0, 0}}) {
        MultiIndex lo(hi.size(), 0);
        CHECK(region_sum_serial(lo, hi, term) == region_sum_parallel(lo, hi, term));
    }
    CHECK(region_sum_serial({2}, {1}, term) == 0);
    CHECK(region_sum_parallel({2}, {1}, term) == 0);
    RegionTerm one = [](const MultiIndex&) -> Rational { return 1; };
    CHECK(region_sum_parallel({0, 0, 0}, {3, 3, 3}, one) == 64);
}
