#include <benchmark/benchmark.h>

#include "macd/kernel.hpp"
#include "macd/matinv.hpp"
#include "macd/random.hpp"

using namespace macd;

namespace {

RegionTerm corollary_term() {
    auto rng = rng_for(1, 0);
    auto p = random_A_params(3, rng);
    MultiIndex m{4, 4, 4};
    return [p, m](const MultiIndex& k) -> Rational {
        try {
            return corollary_A_f(m, k, p);
        } catch (const std::exception&) {
            return 0;
        }
    };
}

void BM_RegionSumSerial(benchmark::State& state) {
    auto term = corollary_term();
    int w = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(region_sum_serial({0, 0, 0}, {w, w, w}, term));
}

void BM_RegionSumParallel(benchmark::State& state) {
    auto term = corollary_term();
    int w = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(region_sum_parallel({0, 0, 0}, {w, w, w}, term));
}

}  // namespace

BENCHMARK(BM_RegionSumSerial)->Arg(2)->Arg(4);
BENCHMARK(BM_RegionSumParallel)->Arg(2)->Arg(4);
BENCHMARK_MAIN();
