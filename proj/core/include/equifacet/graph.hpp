#pragma once

#include "equifacet/geom.hpp"

#include <array>
#include <string>
#include <vector>

namespace equifacet {

using Edge = std::array<int, 2>;
using VertexPair = std::array<int, 2>;

// Combinatorial type of a simplicial 3-polytope: vertices 0..k-1, edges as
// sorted pairs, triangular facets. Instances are only produced by build(),
// which enforces the simplicial invariants.
class PolytopeGraph {
public:
    static PolytopeGraph build(std::string label, int k, std::vector<Edge> edges, std::vector<Facet> facets,
                               std::vector<int> expected_degrees = {}, std::vector<std::string> vertex_names = {});

    // Graph of a triangulated boundary, e.g. a convex hull.
    static PolytopeGraph from_facets(std::string label, int k, const std::vector<Facet>& facets);

    const std::string& label() const { return label_; }
    int k() const { return k_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Facet>& facets() const { return facets_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    int degree(int v) const { return static_cast<int>(neighbors_[v].size()); }
    int max_degree() const;
    std::vector<int> degree_sequence() const;
    const std::vector<int>& neighbors(int v) const { return neighbors_[v]; }
    // Neighbors of v in the cyclic order of its link.
    const std::vector<int>& rotation(int v) const { return rotation_[v]; }
    std::vector<int> common_neighbors(int u, int v) const;

    // Index into edges(), or -1.
    int edge_index(int u, int v) const { return edge_id_[u * k_ + v]; }
    bool adjacent(int u, int v) const { return edge_index(u, v) >= 0; }
    const std::array<int, 3>& facet_edge_ids(int f) const { return facet_edges_[f]; }

    std::string vertex_name(int v) const;
    const std::vector<std::string>& vertex_names() const { return names_; }

private:
    PolytopeGraph() = default;

    std::string label_;
    int k_ = 0;
    std::vector<Edge> edges_;
    std::vector<Facet> facets_;
    std::vector<std::vector<int>> neighbors_;
    std::vector<std::vector<int>> rotation_;
    std::vector<int> edge_id_;
    std::vector<std::array<int, 3>> facet_edges_;
    std::vector<std::string> names_;
};

}  // namespace equifacet
