#pragma once

#include "equifacet/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace equifacet {

// Red marks the base of an isosceles facet (length a), blue its legs (length b).
enum class Color : std::uint8_t { blue = 0, red = 1 };

std::string_view color_name(Color c);

struct EdgeColoring {
    std::uint64_t red = 0;  // bit i set <=> edge i is red

    Color color(int edge) const { return ((red >> edge) & 1U) != 0 ? Color::red : Color::blue; }
    bool operator==(const EdgeColoring&) const = default;
    auto operator<=>(const EdgeColoring&) const = default;
};

Color edge_color(const PolytopeGraph& g, const EdgeColoring& c, int u, int v);

// True iff every facet has exactly one red and two blue edges.
bool is_facet_isosceles(const PolytopeGraph& g, const EdgeColoring& c);

// All facet-isosceles colorings in ascending bitmask order.
std::vector<EdgeColoring> enumerate_colorings(const PolytopeGraph& g);

EdgeColoring coloring_from_red_edges(const PolytopeGraph& g, const std::vector<Edge>& red_edges);
std::vector<Edge> red_edges(const PolytopeGraph& g, const EdgeColoring& c);

// ---- rule engine ----

enum class Rule {
    DefectA,
    PropertyL,
    DefectBAngleDefect,
    DefectCContradiction,
    LemmaAntipodalChain,
    MonochromeFacetOnly,
};

std::string_view rule_name(Rule r);

enum class Forcing { none, defect_b, defect_c };

struct EliminationVerdict {
    bool eliminated = false;
    std::optional<Rule> rule;
    std::vector<int> witnesses;
    std::vector<VertexPair> antipodal_pairs;
    Forcing forcing = Forcing::none;
    VertexPair forcing_pair{-1, -1};

    bool survives() const { return !eliminated; }
    // Survives, but only with equal edge lengths (equilateral facets).
    bool forced_equilateral() const { return !eliminated && forcing != Forcing::none; }
};

std::vector<int> find_colored_two_paths(const PolytopeGraph& g, const EdgeColoring& c, int u, int v, Color color);

// Pairs joined by at least three 2-paths with the same ordered color pattern.
std::vector<VertexPair> deduce_antipodal_pairs(const PolytopeGraph& g, const EdgeColoring& c);

// Same deduction when every edge has one common length.
std::vector<VertexPair> deduce_antipodal_pairs_uniform(const PolytopeGraph& g);

EliminationVerdict check_property_l(const PolytopeGraph& g, const EdgeColoring& c);
// Antipodal endpoint carrying a second edge of the diameter's color.
EliminationVerdict check_defect_a_strict(const PolytopeGraph& g, const EdgeColoring& c);
// A diameter of color X makes every X edge a diameter, so no vertex may
// carry two X edges.
EliminationVerdict check_antipodal_chain(const PolytopeGraph& g, const EdgeColoring& c);
// Strict form first, then the chain form.
EliminationVerdict check_defect_a(const PolytopeGraph& g, const EdgeColoring& c);
EliminationVerdict check_defect_b(const PolytopeGraph& g, const EdgeColoring& c);
EliminationVerdict check_defect_c(const PolytopeGraph& g, const EdgeColoring& c);

EliminationVerdict prune_coloring(const PolytopeGraph& g, const EdgeColoring& c);

struct ColoringVerdict {
    EdgeColoring coloring;
    EliminationVerdict verdict;
};

std::vector<ColoringVerdict> prune(const PolytopeGraph& g);

// Re-derives the cited rule from the witness vertices alone.
bool recheck(const PolytopeGraph& g, const EdgeColoring& c, const EliminationVerdict& v);

}  // namespace equifacet
