#include <benchmark/benchmark.h>

#include "twoended/builtin_specs.hpp"
#include "twoended/saw.hpp"
#include "twoended/symmetry.hpp"

using namespace twoended;

namespace {

void BM_CountSawsLadder(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto counts = count_saws(ladder_spec(), 0, n);
        benchmark::DoNotOptimize(counts.counts.back());
    }
}

void BM_CountSawsGamma(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto counts = count_saws(gamma::gamma_spec(), 0, n);
        benchmark::DoNotOptimize(counts.counts.back());
    }
}

}  // namespace

BENCHMARK(BM_CountSawsLadder)->Arg(12)->Arg(16)->Arg(20);
BENCHMARK(BM_CountSawsGamma)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
