#pragma once

#include "equifacet/coloring.hpp"
#include "equifacet/graph.hpp"

#include <optional>
#include <vector>

namespace equifacet {

using Permutation = std::vector<int>;

// Every graph automorphism, identity first.
std::vector<Permutation> automorphisms(const PolytopeGraph& g);

// Vertex map p with edges of `from` sent onto edges of `to`.
std::optional<Permutation> find_isomorphism(const PolytopeGraph& from, const PolytopeGraph& to);

EdgeColoring permute(const PolytopeGraph& g, const Permutation& p, const EdgeColoring& c);

// Smallest red mask in the orbit of c.
EdgeColoring canonical_form(const PolytopeGraph& g, const std::vector<Permutation>& autos, const EdgeColoring& c);

// Partition of `colorings` into orbits, in order of first appearance.
std::vector<std::vector<EdgeColoring>> coloring_orbits(const PolytopeGraph& g, const std::vector<Permutation>& autos,
                                                       const std::vector<EdgeColoring>& colorings);

}  // namespace equifacet
