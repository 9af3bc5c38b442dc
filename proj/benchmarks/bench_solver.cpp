#include <benchmark/benchmark.h>

#include "twoended/ball_view.hpp"
#include "twoended/builtin_specs.hpp"
#include "twoended/electric.hpp"
#include "twoended/harmonic.hpp"
#include "twoended/symmetry.hpp"

using namespace twoended;

namespace {

struct BallProblem {
    GraphPtr ball;
    int p = 0;
    int q = 0;
};

BallProblem gamma_ball(int radius) {
    auto g = expand(gamma::gamma_spec(), -(radius + 2), radius + 2, 0);
    auto bv = ball_view(g, radius);
    BallProblem out;
    out.ball = g->induced(bv.ball);
    out.p = out.ball->require_index(g->coord(bv.upper_layer.front()));
    out.q = out.ball->require_index(g->coord(bv.lower_layer.front()));
    return out;
}

void BM_UnitCurrentFloat(benchmark::State& state) {
    auto problem = gamma_ball(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto i = unit_current<double>(problem.ball, problem.p, problem.q);
        benchmark::DoNotOptimize(i.by_edge(0));
    }
    state.SetLabel(std::to_string(problem.ball->vertex_count()) + " vertices");
}

void BM_UnitCurrentExact(benchmark::State& state) {
    auto problem = gamma_ball(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto i = unit_current<Rational>(problem.ball, problem.p, problem.q);
        benchmark::DoNotOptimize(i.by_edge(0));
    }
    state.SetLabel(std::to_string(problem.ball->vertex_count()) + " vertices");
}

void BM_LimitHarmonicFloat(benchmark::State& state) {
    for (auto _ : state) {
        auto run = limit_harmonic<double>(gamma::gamma_spec(), 0, {.probe_radius = 3, .eps = 1e-8});
        benchmark::DoNotOptimize(run.converged_radius);
    }
}

}  // namespace

BENCHMARK(BM_UnitCurrentFloat)->Arg(8)->Arg(16)->Arg(32);
BENCHMARK(BM_UnitCurrentExact)->Arg(8)->Arg(16);
BENCHMARK(BM_LimitHarmonicFloat)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
