#pragma once

#include "equifacet/geom.hpp"

#include <cstdint>
#include <vector>

namespace equifacet {

struct OptimizerConfig {
    int k = 8;
    int restarts = 64;
    int iterations = 0;  // per restart; 0 picks default_iterations(k)
    double step_start = 0.3;
    double step_end = 1e-4;
    std::uint64_t seed = 1;
    double penalty_weight = 0.0;
    int threads = 1;
};

int default_iterations(int k);

// Throws InvalidConfig.
void validate(const OptimizerConfig& cfg);

struct OptimizerResult {
    Realization best;  // convex hull of the best configuration
    double area = 0.0;
    double defect = 0.0;  // congruence_defect of `best`
    double objective = 0.0;
    int best_restart = 0;
    std::vector<double> restart_objectives;
};

// Multi-restart derivative-free ascent on (S^2)^k. Each restart owns an RNG
// stream derived from (seed, restart), so results do not depend on `threads`.
OptimizerResult optimize_sphere(const OptimizerConfig& cfg);

}  // namespace equifacet
