#include "equifacet/graph.hpp"

#include "equifacet/errors.hpp"

#include <algorithm>
#include <set>

namespace equifacet {

namespace {

std::string where(const std::string& label) { return label.empty() ? std::string("graph") : label; }

std::vector<int> link_cycle(int v, const std::vector<Facet>& facets, const std::string& label) {
    std::vector<std::array<int, 2>> pairs;
    for (const auto& f : facets) {
        if (f[0] == v) pairs.push_back({f[1], f[2]});
        if (f[1] == v) pairs.push_back({f[0], f[2]});
        if (f[2] == v) pairs.push_back({f[0], f[1]});
    }
    if (pairs.size() < 3) {
        throw InvariantViolation(where(label) + ": vertex " + std::to_string(v) + " lies in fewer than 3 facets");
    }
    std::vector<int> order{pairs[0][0], pairs[0][1]};
    std::vector<char> used(pairs.size(), 0);
    used[0] = 1;
    while (order.size() < pairs.size()) {
        int last = order.back();
        bool extended = false;
        for (std::size_t i = 0; i < pairs.size() && !extended; ++i) {
            if (used[i]) continue;
            if (pairs[i][0] == last || pairs[i][1] == last) {
                used[i] = 1;
                order.push_back(pairs[i][0] == last ? pairs[i][1] : pairs[i][0]);
                extended = true;
            }
        }
        if (!extended) break;
    }
    std::set<int> distinct(order.begin(), order.end());
    bool closes = false;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (!used[i]) {
            closes = (pairs[i][0] == order.back() && pairs[i][1] == order.front()) ||
                     (pairs[i][1] == order.back() && pairs[i][0] == order.front());
        }
    }
    if (order.size() != pairs.size() || distinct.size() != pairs.size() || !closes) {
        throw InvariantViolation(where(label) + ": link of vertex " + std::to_string(v) + " is not a single cycle");
    }
    return order;
}

}  // namespace

PolytopeGraph PolytopeGraph::build(std::string label, int k, std::vector<Edge> edges, std::vector<Facet> facets,
                                   std::vector<int> expected_degrees, std::vector<std::string> vertex_names) {
    const std::string tag = where(label);
    if (k < 4) throw InvariantViolation(tag + ": need at least 4 vertices, got " + std::to_string(k));
    if (3 * k - 6 > 64) throw InvariantViolation(tag + ": more than 64 edges are not supported");

    PolytopeGraph g;
    g.label_ = std::move(label);
    g.k_ = k;

    for (auto& e : edges) {
        if (e[0] < 0 || e[1] < 0 || e[0] >= k || e[1] >= k) {
            throw InvariantViolation(tag + ": edge (" + std::to_string(e[0]) + "," + std::to_string(e[1]) +
                                     ") has a vertex index out of range");
        }
        if (e[0] == e[1]) throw InvariantViolation(tag + ": self-loop at vertex " + std::to_string(e[0]));
        if (e[0] > e[1]) std::swap(e[0], e[1]);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
        throw InvariantViolation(tag + ": duplicate edge");
    }
    if (static_cast<int>(edges.size()) != 3 * k - 6) {
        throw InvariantViolation(tag + ": expected " + std::to_string(3 * k - 6) + " edges (3k-6), got " +
                                 std::to_string(edges.size()));
    }
    if (static_cast<int>(facets.size()) != 2 * k - 4) {
        throw InvariantViolation(tag + ": expected " + std::to_string(2 * k - 4) + " facets (2k-4), got " +
                                 std::to_string(facets.size()));
    }

    g.edges_ = std::move(edges);
    g.edge_id_.assign(static_cast<std::size_t>(k) * k, -1);
    g.neighbors_.assign(k, {});
    for (int i = 0; i < static_cast<int>(g.edges_.size()); ++i) {
        auto [a, b] = g.edges_[i];
        g.edge_id_[a * k + b] = g.edge_id_[b * k + a] = i;
        g.neighbors_[a].push_back(b);
        g.neighbors_[b].push_back(a);
    }
    for (auto& n : g.neighbors_) std::sort(n.begin(), n.end());

    std::vector<int> edge_use(g.edges_.size(), 0);
    std::set<std::array<int, 3>> seen;
    for (const auto& f : facets) {
        std::array<int, 3> s = f;
        std::sort(s.begin(), s.end());
        if (s[0] < 0 || s[2] >= k || s[0] == s[1] || s[1] == s[2]) {
            throw InvariantViolation(tag + ": malformed facet (" + std::to_string(f[0]) + "," + std::to_string(f[1]) +
                                     "," + std::to_string(f[2]) + ")");
        }
        if (!seen.insert(s).second) throw InvariantViolation(tag + ": duplicate facet");
        std::array<int, 3> ids{g.edge_index(s[0], s[1]), g.edge_index(s[1], s[2]), g.edge_index(s[0], s[2])};
        for (int id : ids) {
            if (id < 0) {
                throw InvariantViolation(tag + ": facet (" + std::to_string(f[0]) + "," + std::to_string(f[1]) + "," +
                                         std::to_string(f[2]) + ") uses a missing edge");
            }
            ++edge_use[id];
        }
        g.facet_edges_.push_back(ids);
    }
    for (std::size_t i = 0; i < edge_use.size(); ++i) {
        if (edge_use[i] != 2) {
            throw InvariantViolation(tag + ": edge (" + std::to_string(g.edges_[i][0]) + "," +
                                     std::to_string(g.edges_[i][1]) + ") lies in " + std::to_string(edge_use[i]) +
                                     " facets, expected 2");
        }
    }
    g.facets_ = std::move(facets);

    if (!expected_degrees.empty()) {
        if (expected_degrees != g.degree_sequence()) {
            std::string got;
            for (int d : g.degree_sequence()) got += (got.empty() ? "" : ",") + std::to_string(d);
            throw InvariantViolation(tag + ": degree sequence (" + got + ") does not match the expected checksum");
        }
    }

    for (int v = 0; v < k; ++v) g.rotation_.push_back(link_cycle(v, g.facets_, g.label_));

    if (!vertex_names.empty() && static_cast<int>(vertex_names.size()) != k) {
        throw InvariantViolation(tag + ": vertex_names must have k entries");
    }
    g.names_ = std::move(vertex_names);
    return g;
}

PolytopeGraph PolytopeGraph::from_facets(std::string label, int k, const std::vector<Facet>& facets) {
    std::vector<Edge> edges = facet_edges(facets);
    return build(std::move(label), k, std::move(edges), facets);
}

int PolytopeGraph::max_degree() const {
    int m = 0;
    for (int v = 0; v < k_; ++v) m = std::max(m, degree(v));
    return m;
}

std::vector<int> PolytopeGraph::degree_sequence() const {
    std::vector<int> d;
    for (int v = 0; v < k_; ++v) d.push_back(degree(v));
    return d;
}

std::vector<int> PolytopeGraph::common_neighbors(int u, int v) const {
    std::vector<int> out;
    std::set_intersection(neighbors_[u].begin(), neighbors_[u].end(), neighbors_[v].begin(), neighbors_[v].end(),
                          std::back_inserter(out));
    return out;
}

std::string PolytopeGraph::vertex_name(int v) const {
    if (!names_.empty()) return names_[v];
    return "v" + std::to_string(v + 1);
}

}  // namespace equifacet
