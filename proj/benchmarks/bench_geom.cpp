#include <equifacet/geom.hpp>

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

namespace {

std::vector<equifacet::Point3> sphere_points(int k, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> n(0.0, 1.0);
    std::vector<equifacet::Point3> pts;
    while (static_cast<int>(pts.size()) < k) {
        equifacet::Point3 p{n(rng), n(rng), n(rng)};
        if (equifacet::norm(p) > 1e-6) pts.push_back(equifacet::normalized(p));
    }
    return pts;
}

void BM_ConvexHull(benchmark::State& state) {
    auto pts = sphere_points(static_cast<int>(state.range(0)), 17);
    for (auto _ : state) {
        auto hull = equifacet::convex_hull(pts);
        benchmark::DoNotOptimize(hull.facets.data());
    }
}
BENCHMARK(BM_ConvexHull)->Arg(8)->Arg(12)->Arg(64);

void BM_SurfaceArea(benchmark::State& state) {
    auto hull = equifacet::convex_hull(sphere_points(static_cast<int>(state.range(0)), 17));
    for (auto _ : state) benchmark::DoNotOptimize(equifacet::surface_area(hull));
}
BENCHMARK(BM_SurfaceArea)->Arg(8)->Arg(64);

void BM_ClassifyFacets(benchmark::State& state) {
    auto hull = equifacet::convex_hull(equifacet::regular_icosahedron().points);
    for (auto _ : state) {
        auto fc = equifacet::classify_facets(hull);
        benchmark::DoNotOptimize(fc.congruent);
    }
}
BENCHMARK(BM_ClassifyFacets);

}  // namespace
