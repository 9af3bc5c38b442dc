#include <benchmark/benchmark.h>

#include "twoended/symmetry.hpp"

using namespace twoended;

namespace {

void BM_WordEnumeration(benchmark::State& state) {
    const int len = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto elements = gamma::enumerate_elements(len, 12, nullptr);
        benchmark::DoNotOptimize(elements.size());
    }
}

void BM_TenCycleCensus(benchmark::State& state) {
    for (auto _ : state) {
        auto census = gamma::ten_cycle_separation_census(2);
        benchmark::DoNotOptimize(census.total);
    }
}

}  // namespace

BENCHMARK(BM_WordEnumeration)->Arg(6)->Arg(8);
BENCHMARK(BM_TenCycleCensus)->Unit(benchmark::kMillisecond);
