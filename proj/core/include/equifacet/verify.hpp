#pragma once

#include "equifacet/catalog.hpp"
#include "equifacet/coloring.hpp"
#include "equifacet/geom.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace equifacet {

enum class Disposition {
    realized,               // explicit coordinates, area counts toward the maximum
    refuted,                // forced coordinates contradict the combinatorics
    cited_non_inscribable,  // excluded by a known non-inscribability result
    unresolved,             // no handler; flags the run as incomplete
};

std::string_view disposition_name(Disposition d);

struct ClassOutcome {
    std::string variant;
    Disposition disposition = Disposition::unresolved;
    std::string method;
    std::string detail;
    std::vector<EdgeColoring> colorings;  // orbit representatives it covers
    std::optional<Realization> realization;
    double area = 0.0;
    double a = 0.0;
    double b = 0.0;
    bool degenerate = false;
};

// Per-class outcome of pruning plus geometric disposal of what survives.
struct ClassResult {
    std::string class_label;
    int colorings = 0;
    int automorphisms = 0;
    std::map<Rule, int> eliminated_by;
    int survivors = 0;
    int survivor_orbits = 0;
    int forced_equilateral = 0;
    int forced_equilateral_orbits = 0;
    std::vector<EdgeColoring> survivor_representatives;
    std::vector<ClassOutcome> outcomes;
};

// Pruning statistics for one graph (no geometry).
ClassResult summarize_pruning(const PolytopeGraph& g);

struct VerifyOptions {
    bool strict = false;  // ignore degenerate realizations
    std::uint64_t seed = 1;
    std::optional<std::vector<CatalogEntry>> catalog;  // defaults to the built-in one
};

struct VerifyReport {
    int k = 0;
    std::vector<ClassResult> classes;

    double max_area = 0.0;
    std::string winner_class;
    std::string winner_variant;
    Realization witness;
    std::vector<std::string> ties;

    double strict_max_area = 0.0;
    std::string strict_winner_class;
    std::string strict_winner_variant;

    double expected_max = 0.0;
    std::string expected_winner;
    bool strict = false;
    bool max_matches = false;
    bool winner_matches = false;
    bool witness_matches = false;
    bool all_resolved = false;
    bool passed = false;
};

// k must be 7 or 8; throws InvalidArgument otherwise.
VerifyReport verify_theorem(int k, const VerifyOptions& opts = {});

double expected_maximum(int k);

}  // namespace equifacet
