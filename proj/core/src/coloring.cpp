#include "equifacet/coloring.hpp"

#include "equifacet/errors.hpp"

#include <algorithm>

namespace equifacet {

std::string_view color_name(Color c) { return c == Color::red ? "red" : "blue"; }

std::string_view rule_name(Rule r) {
    switch (r) {
        case Rule::DefectA: return "DefectA";
        case Rule::PropertyL: return "PropertyL";
        case Rule::DefectBAngleDefect: return "DefectB+AngleDefect";
        case Rule::DefectCContradiction: return "DefectC-contradiction";
        case Rule::LemmaAntipodalChain: return "Lemma-antipodal-chain";
        case Rule::MonochromeFacetOnly: return "MonochromeFacetOnly";
    }
    return "unknown";
}

Color edge_color(const PolytopeGraph& g, const EdgeColoring& c, int u, int v) {
    return c.color(g.edge_index(u, v));
}

bool is_facet_isosceles(const PolytopeGraph& g, const EdgeColoring& c) {
    for (int f = 0; f < static_cast<int>(g.facets().size()); ++f) {
        int reds = 0;
        for (int e : g.facet_edge_ids(f)) reds += c.color(e) == Color::red ? 1 : 0;
        if (reds != 1) return false;
    }
    return true;
}

std::vector<EdgeColoring> enumerate_colorings(const PolytopeGraph& g) {
    const int m = g.edge_count();
    const int nf = static_cast<int>(g.facets().size());
    std::vector<std::vector<int>> facets_of_edge(m);
    for (int f = 0; f < nf; ++f) {
        for (int e : g.facet_edge_ids(f)) facets_of_edge[e].push_back(f);
    }
    std::vector<int> reds(nf, 0);
    std::vector<int> assigned(nf, 0);
    std::vector<EdgeColoring> out;

    // Deciding the most significant edge first and trying blue before red
    // emits masks in ascending numeric order.
    auto dfs = [&](auto&& self, int e, std::uint64_t mask) -> void {
        if (e < 0) {
            out.push_back({mask});
            return;
        }
        for (int bit = 0; bit < 2; ++bit) {
            bool ok = true;
            for (int f : facets_of_edge[e]) {
                reds[f] += bit;
                ++assigned[f];
                if (reds[f] > 1 || (assigned[f] == 3 && reds[f] != 1)) ok = false;
            }
            if (ok) self(self, e - 1, mask | (static_cast<std::uint64_t>(bit) << e));
            for (int f : facets_of_edge[e]) {
                reds[f] -= bit;
                --assigned[f];
            }
        }
    };
    dfs(dfs, m - 1, 0);
    return out;
}

EdgeColoring coloring_from_red_edges(const PolytopeGraph& g, const std::vector<Edge>& red) {
    EdgeColoring c;
    for (const auto& e : red) {
        if (e[0] < 0 || e[1] < 0 || e[0] >= g.k() || e[1] >= g.k() || !g.adjacent(e[0], e[1])) {
            throw InvalidArgument(g.label() + ": (" + std::to_string(e[0]) + "," + std::to_string(e[1]) +
                                  ") is not an edge");
        }
        c.red |= std::uint64_t{1} << g.edge_index(e[0], e[1]);
    }
    return c;
}

std::vector<Edge> red_edges(const PolytopeGraph& g, const EdgeColoring& c) {
    std::vector<Edge> out;
    for (int i = 0; i < g.edge_count(); ++i) {
        if (c.color(i) == Color::red) out.push_back(g.edges()[i]);
    }
    return out;
}

std::vector<int> find_colored_two_paths(const PolytopeGraph& g, const EdgeColoring& c, int u, int v, Color color) {
    std::vector<int> out;
    if (u == v) return out;
    for (int w : g.common_neighbors(u, v)) {
        if (edge_color(g, c, u, w) == color && edge_color(g, c, w, v) == color) out.push_back(w);
    }
    return out;
}

namespace {

bool lemma_antipodal(const PolytopeGraph& g, const EdgeColoring& c, int u, int v) {
    int counts[2][2] = {{0, 0}, {0, 0}};
    for (int w : g.common_neighbors(u, v)) {
        ++counts[static_cast<int>(edge_color(g, c, u, w))][static_cast<int>(edge_color(g, c, w, v))];
    }
    for (auto& row : counts) {
        for (int n : row) {
            if (n >= 3) return true;
        }
    }
    return false;
}

bool defect_b_pattern(const PolytopeGraph& g, const EdgeColoring& c, int u, int v) {
    auto r = find_colored_two_paths(g, c, u, v, Color::red).size();
    auto b = find_colored_two_paths(g, c, u, v, Color::blue).size();
    return (r >= 3 && b >= 1) || (b >= 3 && r >= 1);
}

bool defect_c_pattern(const PolytopeGraph& g, const EdgeColoring& c, int u, int v) {
    auto red = find_colored_two_paths(g, c, u, v, Color::red);
    auto blue = find_colored_two_paths(g, c, u, v, Color::blue);
    if (red.size() != 2 || blue.size() != 2) return false;
    for (int x : {u, v}) {
        std::vector<int> pattern;
        for (int w : g.rotation(x)) {
            if (std::find(red.begin(), red.end(), w) != red.end()) pattern.push_back(1);
            if (std::find(blue.begin(), blue.end(), w) != blue.end()) pattern.push_back(0);
        }
        if (pattern[0] != pattern[1] && pattern[1] != pattern[2] && pattern[2] != pattern[3]) return true;
    }
    return false;
}

int first_vertex_of_degree_at_least(const PolytopeGraph& g, int d) {
    for (int v = 0; v < g.k(); ++v) {
        if (g.degree(v) >= d) return v;
    }
    return -1;
}

int count_color_at(const PolytopeGraph& g, const EdgeColoring& c, int v, Color x) {
    int n = 0;
    for (int w : g.neighbors(v)) n += edge_color(g, c, v, w) == x ? 1 : 0;
    return n;
}

EliminationVerdict eliminated(Rule r, std::vector<int> witnesses) {
    EliminationVerdict v;
    v.eliminated = true;
    v.rule = r;
    v.witnesses = std::move(witnesses);
    return v;
}

// Searches for a forcing pair under one of the two length-forcing patterns.
EliminationVerdict forcing_check(const PolytopeGraph& g, const EdgeColoring& c, Forcing kind) {
    for (int u = 0; u < g.k(); ++u) {
        for (int v = u + 1; v < g.k(); ++v) {
            bool hit = kind == Forcing::defect_b ? defect_b_pattern(g, c, u, v) : defect_c_pattern(g, c, u, v);
            if (!hit) continue;
            int z = first_vertex_of_degree_at_least(g, 6);
            if (z >= 0) {
                Rule r = kind == Forcing::defect_b ? Rule::DefectBAngleDefect : Rule::DefectCContradiction;
                auto out = eliminated(r, {u, v, z});
                out.forcing = kind;
                out.forcing_pair = {u, v};
                return out;
            }
            EliminationVerdict out;
            out.forcing = kind;
            out.forcing_pair = {u, v};
            return out;
        }
    }
    return {};
}

}  // namespace

std::vector<VertexPair> deduce_antipodal_pairs(const PolytopeGraph& g, const EdgeColoring& c) {
    std::vector<VertexPair> out;
    for (int u = 0; u < g.k(); ++u) {
        for (int v = u + 1; v < g.k(); ++v) {
            if (lemma_antipodal(g, c, u, v)) out.push_back({u, v});
        }
    }
    return out;
}

std::vector<VertexPair> deduce_antipodal_pairs_uniform(const PolytopeGraph& g) {
    std::vector<VertexPair> out;
    for (int u = 0; u < g.k(); ++u) {
        for (int v = u + 1; v < g.k(); ++v) {
            if (g.common_neighbors(u, v).size() >= 3) out.push_back({u, v});
        }
    }
    return out;
}

EliminationVerdict check_property_l(const PolytopeGraph& g, const EdgeColoring& c) {
    for (int v = 0; v < g.k(); ++v) {
        if (g.degree(v) != 3) continue;
        int reds = count_color_at(g, c, v, Color::red);
        if (reds != 0 && reds != 3) return eliminated(Rule::PropertyL, {v});
    }
    return {};
}

EliminationVerdict check_defect_a_strict(const PolytopeGraph& g, const EdgeColoring& c) {
    for (const auto& [u, v] : deduce_antipodal_pairs(g, c)) {
        if (!g.adjacent(u, v)) continue;
        Color x = edge_color(g, c, u, v);
        for (auto [e, o] : {VertexPair{u, v}, VertexPair{v, u}}) {
            for (int w : g.neighbors(e)) {
                if (w != o && edge_color(g, c, e, w) == x) return eliminated(Rule::DefectA, {e, o, w});
            }
        }
    }
    return {};
}

EliminationVerdict check_antipodal_chain(const PolytopeGraph& g, const EdgeColoring& c) {
    for (const auto& [u, v] : deduce_antipodal_pairs(g, c)) {
        if (!g.adjacent(u, v)) continue;
        Color x = edge_color(g, c, u, v);
        for (int w = 0; w < g.k(); ++w) {
            std::vector<int> ends;
            for (int y : g.neighbors(w)) {
                if (edge_color(g, c, w, y) == x) ends.push_back(y);
            }
            if (ends.size() >= 2) return eliminated(Rule::LemmaAntipodalChain, {u, v, ends[0], w, ends[1]});
        }
    }
    return {};
}

EliminationVerdict check_defect_a(const PolytopeGraph& g, const EdgeColoring& c) {
    auto v = check_defect_a_strict(g, c);
    if (v.eliminated) return v;
    return check_antipodal_chain(g, c);
}

EliminationVerdict check_defect_b(const PolytopeGraph& g, const EdgeColoring& c) {
    return forcing_check(g, c, Forcing::defect_b);
}

EliminationVerdict check_defect_c(const PolytopeGraph& g, const EdgeColoring& c) {
    return forcing_check(g, c, Forcing::defect_c);
}

EliminationVerdict prune_coloring(const PolytopeGraph& g, const EdgeColoring& c) {
    auto pairs = deduce_antipodal_pairs(g, c);
    auto attach = [&pairs](EliminationVerdict v) {
        v.antipodal_pairs = pairs;
        return v;
    };

    if (auto v = check_property_l(g, c); v.eliminated) return attach(v);
    if (auto v = check_defect_a(g, c); v.eliminated) return attach(v);

    auto forced = check_defect_b(g, c);
    if (forced.forcing == Forcing::none) forced = check_defect_c(g, c);
    if (forced.eliminated) return attach(forced);

    if (forced.forcing != Forcing::none) {
        // With a = b every facet is monochrome and any three common
        // neighbours pin a diameter; a diameter that is also an edge would
        // make every edge a diameter.
        for (const auto& [u, v] : deduce_antipodal_pairs_uniform(g)) {
            if (g.adjacent(u, v)) {
                auto out = eliminated(Rule::MonochromeFacetOnly,
                                      {u, v, forced.forcing_pair[0], forced.forcing_pair[1]});
                out.forcing = forced.forcing;
                out.forcing_pair = forced.forcing_pair;
                return attach(out);
            }
        }
    }
    return attach(forced);
}

std::vector<ColoringVerdict> prune(const PolytopeGraph& g) {
    std::vector<ColoringVerdict> out;
    for (const auto& c : enumerate_colorings(g)) out.push_back({c, prune_coloring(g, c)});
    return out;
}

bool recheck(const PolytopeGraph& g, const EdgeColoring& c, const EliminationVerdict& v) {
    if (!v.eliminated) return !prune_coloring(g, c).eliminated;
    if (!v.rule) return false;
    const auto& w = v.witnesses;
    for (int x : w) {
        if (x < 0 || x >= g.k()) return false;
    }
    auto forcing_ok = [&](int a, int b) { return defect_b_pattern(g, c, a, b) || defect_c_pattern(g, c, a, b); };
    switch (*v.rule) {
        case Rule::PropertyL: {
            if (w.size() != 1 || g.degree(w[0]) != 3) return false;
            int reds = count_color_at(g, c, w[0], Color::red);
            return reds != 0 && reds != 3;
        }
        case Rule::DefectA: {
            if (w.size() != 3 || !g.adjacent(w[0], w[1]) || !g.adjacent(w[0], w[2]) || w[2] == w[1]) return false;
            return lemma_antipodal(g, c, w[0], w[1]) && edge_color(g, c, w[0], w[1]) == edge_color(g, c, w[0], w[2]);
        }
        case Rule::LemmaAntipodalChain: {
            if (w.size() != 5 || !g.adjacent(w[0], w[1]) || !lemma_antipodal(g, c, w[0], w[1])) return false;
            if (w[2] == w[4] || !g.adjacent(w[3], w[2]) || !g.adjacent(w[3], w[4])) return false;
            Color x = edge_color(g, c, w[0], w[1]);
            return edge_color(g, c, w[3], w[2]) == x && edge_color(g, c, w[3], w[4]) == x;
        }
        case Rule::DefectBAngleDefect:
            return w.size() == 3 && defect_b_pattern(g, c, w[0], w[1]) && g.degree(w[2]) >= 6;
        case Rule::DefectCContradiction:
            return w.size() == 3 && defect_c_pattern(g, c, w[0], w[1]) && g.degree(w[2]) >= 6;
        case Rule::MonochromeFacetOnly:
            return w.size() == 4 && g.adjacent(w[0], w[1]) && g.common_neighbors(w[0], w[1]).size() >= 3 &&
                   forcing_ok(w[2], w[3]);
    }
    return false;
}

}  // namespace equifacet
