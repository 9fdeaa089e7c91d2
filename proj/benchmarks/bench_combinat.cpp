#include <equifacet/catalog.hpp>
#include <equifacet/coloring.hpp>
#include <equifacet/symmetry.hpp>

#include <benchmark/benchmark.h>

namespace {

const equifacet::CatalogEntry& class14() {
    static const auto k8 = equifacet::builtin_catalog("k8");
    return equifacet::find_class(k8, "K8-C14");
}

void BM_EnumerateColorings(benchmark::State& state) {
    const auto& g = class14().graph;
    for (auto _ : state) {
        auto cs = equifacet::enumerate_colorings(g);
        benchmark::DoNotOptimize(cs.data());
    }
}
BENCHMARK(BM_EnumerateColorings);

void BM_PruneClass(benchmark::State& state) {
    const auto& g = class14().graph;
    for (auto _ : state) {
        auto v = equifacet::prune(g);
        benchmark::DoNotOptimize(v.data());
    }
}
BENCHMARK(BM_PruneClass);

void BM_PruneWholeCatalog(benchmark::State& state) {
    const auto k8 = equifacet::builtin_catalog("k8");
    for (auto _ : state) {
        for (const auto& e : k8) {
            auto v = equifacet::prune(e.graph);
            benchmark::DoNotOptimize(v.data());
        }
    }
}
BENCHMARK(BM_PruneWholeCatalog)->Unit(benchmark::kMillisecond);

void BM_Automorphisms(benchmark::State& state) {
    const auto& g = class14().graph;
    for (auto _ : state) {
        auto a = equifacet::automorphisms(g);
        benchmark::DoNotOptimize(a.data());
    }
}
BENCHMARK(BM_Automorphisms);

}  // namespace
