#include "equifacet/symmetry.hpp"

#include <algorithm>
#include <set>

namespace equifacet {

namespace {

// Backtracking over degree-compatible images, checking adjacency against
// every already-placed vertex. Calls `emit` for each complete map; stops
// when it returns false.
template <class Emit>
void search_maps(const PolytopeGraph& a, const PolytopeGraph& b, Emit&& emit) {
    const int k = a.k();
    Permutation p(k, -1);
    std::vector<char> used(k, 0);
    bool stop = false;
    auto rec = [&](auto&& self, int i) -> void {
        if (stop) return;
        if (i == k) {
            if (!emit(p)) stop = true;
            return;
        }
        for (int img = 0; img < k && !stop; ++img) {
            if (used[img] || a.degree(i) != b.degree(img)) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j) ok = a.adjacent(i, j) == b.adjacent(img, p[j]);
            if (!ok) continue;
            p[i] = img;
            used[img] = 1;
            self(self, i + 1);
            used[img] = 0;
            p[i] = -1;
        }
    };
    rec(rec, 0);
}

}  // namespace

std::vector<Permutation> automorphisms(const PolytopeGraph& g) {
    std::vector<Permutation> out;
    search_maps(g, g, [&out](const Permutation& p) {
        out.push_back(p);
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<Permutation> find_isomorphism(const PolytopeGraph& from, const PolytopeGraph& to) {
    if (from.k() != to.k() || from.edge_count() != to.edge_count()) return std::nullopt;
    auto da = from.degree_sequence();
    auto db = to.degree_sequence();
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return std::nullopt;
    std::optional<Permutation> found;
    search_maps(from, to, [&found](const Permutation& p) {
        found = p;
        return false;
    });
    return found;
}

EdgeColoring permute(const PolytopeGraph& g, const Permutation& p, const EdgeColoring& c) {
    EdgeColoring out;
    for (int i = 0; i < g.edge_count(); ++i) {
        if (c.color(i) != Color::red) continue;
        const auto& e = g.edges()[i];
        out.red |= std::uint64_t{1} << g.edge_index(p[e[0]], p[e[1]]);
    }
    return out;
}

EdgeColoring canonical_form(const PolytopeGraph& g, const std::vector<Permutation>& autos, const EdgeColoring& c) {
    EdgeColoring best = c;
    for (const auto& p : autos) best = std::min(best, permute(g, p, c));
    return best;
}

std::vector<std::vector<EdgeColoring>> coloring_orbits(const PolytopeGraph& g, const std::vector<Permutation>& autos,
                                                       const std::vector<EdgeColoring>& colorings) {
    std::vector<std::vector<EdgeColoring>> orbits;
    std::vector<EdgeColoring> keys;
    for (const auto& c : colorings) {
        EdgeColoring key = canonical_form(g, autos, c);
        auto it = std::find(keys.begin(), keys.end(), key);
        if (it == keys.end()) {
            keys.push_back(key);
            orbits.push_back({c});
        } else {
            orbits[static_cast<std::size_t>(it - keys.begin())].push_back(c);
        }
    }
    return orbits;
}

}  // namespace equifacet
