#include <equifacet/optimizer.hpp>

#include <benchmark/benchmark.h>

namespace {

// One restart at the default iteration budget.
void BM_OptimizerRestart(benchmark::State& state) {
    equifacet::OptimizerConfig cfg;
    cfg.k = static_cast<int>(state.range(0));
    cfg.restarts = 1;
    for (auto _ : state) {
        auto r = equifacet::optimize_sphere(cfg);
        benchmark::DoNotOptimize(r.area);
    }
}
BENCHMARK(BM_OptimizerRestart)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace
