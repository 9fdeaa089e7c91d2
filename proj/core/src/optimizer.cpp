#include "equifacet/optimizer.hpp"

#include "equifacet/errors.hpp"
#include "rng.hpp"

#include <atomic>
#include <cmath>
#include <string>
#include <thread>

namespace equifacet {

namespace {

struct Restart {
    std::vector<Point3> points;
    double objective = -1.0;
};

double objective_of(const std::vector<Point3>& pts, double weight) {
    Realization hull = convex_hull(pts);
    double value = surface_area(hull);
    if (weight > 0.0) value -= weight * congruence_defect(hull);
    return value;
}

Restart run_restart(const OptimizerConfig& cfg, int iterations, int index) {
    auto rng = detail::stream(cfg.seed, static_cast<std::uint64_t>(index));
    auto random_unit = [&rng] {
        return normalized(Point3{detail::gaussian(rng), detail::gaussian(rng), detail::gaussian(rng)});
    };

    Restart r;
    r.points.resize(cfg.k);
    for (auto& p : r.points) p = random_unit();
    r.objective = objective_of(r.points, cfg.penalty_weight);

    const double ratio = cfg.step_end / cfg.step_start;
    std::vector<Point3> trial = r.points;
    for (int it = 0; it < iterations; ++it) {
        const double step = cfg.step_start * std::pow(ratio, static_cast<double>(it) / std::max(1, iterations - 1));
        const int i = static_cast<int>(rng() % static_cast<std::uint64_t>(cfg.k));
        Point3 g{detail::gaussian(rng), detail::gaussian(rng), detail::gaussian(rng)};
        const Point3& p = r.points[i];
        Point3 tangent = g - p * dot(g, p);
        trial[i] = normalized(p + tangent * step);
        double value = -1.0;
        try {
            value = objective_of(trial, cfg.penalty_weight);
        } catch (const DegenerateInput&) {
            value = -1.0;
        }
        if (value > r.objective) {
            r.objective = value;
            r.points[i] = trial[i];
        } else {
            trial[i] = p;
        }
    }
    return r;
}

}  // namespace

int default_iterations(int k) { return 2500 * k; }

void validate(const OptimizerConfig& cfg) {
    auto fail = [](const std::string& m) { throw InvalidConfig(m); };
    if (cfg.k < 4) fail("k must be at least 4, got " + std::to_string(cfg.k));
    if (cfg.k > 64) fail("k must be at most 64, got " + std::to_string(cfg.k));
    if (cfg.restarts < 1) fail("restarts must be positive");
    if (cfg.iterations < 0) fail("iterations must be non-negative");
    if (!(cfg.step_start > 0.0) || !(cfg.step_end > 0.0) || cfg.step_end > cfg.step_start) {
        fail("step schedule must satisfy 0 < step_end <= step_start");
    }
    if (!(cfg.penalty_weight >= 0.0) || !std::isfinite(cfg.penalty_weight)) fail("penalty weight must be finite and >= 0");
    if (cfg.threads < 1) fail("threads must be positive");
}

OptimizerResult optimize_sphere(const OptimizerConfig& cfg) {
    validate(cfg);
    const int iterations = cfg.iterations > 0 ? cfg.iterations : default_iterations(cfg.k);

    std::vector<Restart> runs(cfg.restarts);
    const int workers = std::min(cfg.threads, cfg.restarts);
    if (workers <= 1) {
        for (int i = 0; i < cfg.restarts; ++i) runs[i] = run_restart(cfg, iterations, i);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (int i = next++; i < cfg.restarts; i = next++) runs[i] = run_restart(cfg, iterations, i);
            });
        }
        for (auto& t : pool) t.join();
    }

    OptimizerResult out;
    int best = 0;
    for (int i = 0; i < cfg.restarts; ++i) {
        out.restart_objectives.push_back(runs[i].objective);
        if (runs[i].objective > runs[best].objective) best = i;
    }
    out.best_restart = best;
    out.best = convex_hull(runs[best].points);
    out.area = surface_area(out.best);
    out.defect = congruence_defect(out.best);
    out.objective = runs[best].objective;
    return out;
}

}  // namespace equifacet
