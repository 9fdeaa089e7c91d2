#include <equifacet/catalog.hpp>
#include <equifacet/coloring.hpp>
#include <equifacet/errors.hpp>
#include <equifacet/symmetry.hpp>
#include <equifacet/verify.hpp>

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace equifacet;

namespace {

// Independent oracle: test every subset of edges directly against the facets.
std::vector<std::uint64_t> brute_force_colorings(const PolytopeGraph& g) {
    std::vector<std::uint64_t> out;
    const std::uint64_t n = std::uint64_t{1} << g.edge_count();
    for (std::uint64_t mask = 0; mask < n; ++mask) {
        bool ok = true;
        for (const auto& f : g.facets()) {
            int red = 0;
            for (int i = 0; i < 3; ++i) {
                int e = g.edge_index(f[i], f[(i + 1) % 3]);
                red += static_cast<int>((mask >> e) & 1U);
            }
            if (red != 1) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(mask);
    }
    return out;
}

std::vector<CatalogEntry> all_entries() {
    std::vector<CatalogEntry> all;
    for (const char* name : {"warmup", "k7", "k8"}) {
        auto c = builtin_catalog(name);
        all.insert(all.end(), c.begin(), c.end());
    }
    return all;
}

enum class Status { eliminated, survives, forced_equilateral };

Status status(const EliminationVerdict& v) {
    if (v.eliminated) return Status::eliminated;
    return v.forced_equilateral() ? Status::forced_equilateral : Status::survives;
}

const char* tetra_doc = R"({"entries": [{"class_label": "T", "k": 4,
  "expected_degree_sequence": [3, 3, 3, 3],
  "edges": [[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]],
  "facets": [[0,1,2],[0,1,3],[0,2,3],[1,2,3]]}]})";

}  // namespace

TEST_CASE("shipped catalogs have the expected class counts and degree sequences") {
    auto k7 = builtin_catalog("k7");
    auto k8 = builtin_catalog("k8");
    CHECK(k7.size() == 5);
    CHECK(k8.size() == 14);
    CHECK(find_class(k7, "K7-C1").graph.degree_sequence() == std::vector<int>{5, 3, 5, 3, 5, 3, 6});
    CHECK(find_class(k7, "K7-C2").graph.degree_sequence() == std::vector<int>{6, 3, 4, 4, 4, 3, 6});
    CHECK(find_class(k7, "K7-C3").graph.degree_sequence() == std::vector<int>{5, 4, 3, 5, 4, 3, 6});
    CHECK(find_class(k7, "K7-C4").graph.degree_sequence() == std::vector<int>{5, 5, 4, 4, 4, 5, 3});
    CHECK(find_class(k7, "K7-C5").graph.degree_sequence() == std::vector<int>{4, 4, 4, 4, 4, 5, 5});
    CHECK(find_class(k8, "K8-C10").graph.degree_sequence() == std::vector<int>{5, 5, 5, 3, 5, 5, 3, 5});

    for (const auto& e : all_entries()) {
        const auto& g = e.graph;
        CAPTURE(g.label());
        CHECK(g.edge_count() == 3 * g.k() - 6);
        CHECK(static_cast<int>(g.facets().size()) == 2 * g.k() - 4);
    }
}

TEST_CASE("catalog classes are pairwise non-isomorphic") {
    auto k8 = builtin_catalog("k8");
    for (std::size_t i = 0; i < k8.size(); ++i) {
        for (std::size_t j = i + 1; j < k8.size(); ++j) {
            CAPTURE(k8[i].graph.label());
            CAPTURE(k8[j].graph.label());
            CHECK_FALSE(find_isomorphism(k8[i].graph, k8[j].graph).has_value());
        }
    }
}

TEST_CASE("catalog errors") {
    CHECK_THROWS_AS(load_catalog(""), MalformedCatalog);
    CHECK_THROWS_AS(load_catalog("{\"entries\": []}"), MalformedCatalog);
    CHECK_THROWS_AS(load_catalog("{\"entries\": [ {\"k\": 4,"), MalformedCatalog);
    CHECK_NOTHROW(load_catalog(tetra_doc));

    std::string bad_degree = tetra_doc;
    bad_degree.replace(bad_degree.find("[3, 3, 3, 3]"), 12, "[3, 3, 3, 4]");
    CHECK_THROWS_AS(load_catalog(bad_degree), InvariantViolation);

    std::string missing_facet = tetra_doc;
    missing_facet.replace(missing_facet.find(",[1,2,3]"), 8, "");
    CHECK_THROWS_AS(load_catalog(missing_facet), InvariantViolation);

    CHECK_THROWS_AS(load_catalog_file("/nonexistent/file.catalog"), MalformedCatalog);
}

TEST_CASE("malformed catalog messages locate the error") {
    try {
        load_catalog("{\n  \"entries\": [\n    {\"k\": 4,, }\n  ]\n}", "broken.catalog");
        FAIL("expected MalformedCatalog");
    } catch (const MalformedCatalog& e) {
        std::string msg = e.what();
        CHECK(msg.find("broken.catalog") != std::string::npos);
        CHECK(msg.find("line 3") != std::string::npos);
    }
}

TEST_CASE("enumeration agrees with the brute-force oracle on every class") {
    for (const auto& e : all_entries()) {
        const auto& g = e.graph;
        CAPTURE(g.label());
        auto fast = enumerate_colorings(g);
        auto slow = brute_force_colorings(g);
        REQUIRE(fast.size() == slow.size());
        for (std::size_t i = 0; i < fast.size(); ++i) CHECK(fast[i].red == slow[i]);
        for (const auto& c : fast) CHECK(is_facet_isosceles(g, c));
    }
}

TEST_CASE("the tetrahedron has three colorings, each opposite-edge pair red") {
    auto g = find_class(builtin_catalog("warmup"), "K4").graph;
    auto cs = enumerate_colorings(g);
    REQUIRE(cs.size() == 3);
    for (const auto& c : cs) {
        auto red = red_edges(g, c);
        REQUIRE(red.size() == 2);
        std::set<int> touched{red[0][0], red[0][1], red[1][0], red[1][1]};
        CHECK(touched.size() == 4);
    }
}

TEST_CASE("warm-up outcomes") {
    auto warm = builtin_catalog("warmup");
    SUBCASE("K4: no isosceles coloring survives") {
        auto r = summarize_pruning(find_class(warm, "K4").graph);
        CHECK(r.colorings == 3);
        CHECK(r.survivors == 0);
        CHECK(r.forced_equilateral == 0);
        CHECK(r.eliminated_by.at(Rule::PropertyL) == 3);
    }
    SUBCASE("K5: the triangular bipyramid coloring is unique") {
        const auto& g = find_class(warm, "K5").graph;
        auto r = summarize_pruning(g);
        REQUIRE(r.survivors == 1);
        auto red = red_edges(g, r.survivor_representatives.front());
        for (const auto& e : red) {
            CHECK(g.degree(e[0]) == 4);
            CHECK(g.degree(e[1]) == 4);
        }
    }
    SUBCASE("K6 with a degree-3 vertex is eliminated") {
        auto r = summarize_pruning(find_class(warm, "K6-C1").graph);
        CHECK(r.colorings > 0);
        CHECK(r.survivors == 0);
        CHECK(r.forced_equilateral == 0);
    }
    SUBCASE("K6 octahedron only survives as the regular octahedron") {
        auto r = summarize_pruning(find_class(warm, "K6-C2").graph);
        CHECK(r.survivors == 0);
        CHECK(r.forced_equilateral == r.colorings);
        CHECK(r.forced_equilateral_orbits == 2);
    }
}

TEST_CASE("seven vertices: only the pentagonal bipyramid keeps survivors") {
    auto k7 = builtin_catalog("k7");
    for (const auto& e : k7) {
        auto r = summarize_pruning(e.graph);
        CAPTURE(e.graph.label());
        if (e.graph.label() == "K7-C5") {
            CHECK(r.survivors == 1);
        } else {
            CHECK(r.survivors == 0);
            CHECK(r.forced_equilateral == 0);
        }
    }
}

TEST_CASE("the Class 2 near-survivor") {
    const auto e = find_class(builtin_catalog("k7"), "K7-C2");
    auto c = e.reference("near-survivor");
    REQUIRE(is_facet_isosceles(e.graph, c));
    CHECK_FALSE(check_defect_a_strict(e.graph, c).eliminated);
    auto chain = check_antipodal_chain(e.graph, c);
    REQUIRE(chain.eliminated);
    CHECK(*chain.rule == Rule::LemmaAntipodalChain);
    CHECK(recheck(e.graph, c, chain));
    // The two degree-6 vertices are the antipodal pair.
    CHECK(e.graph.degree(chain.witnesses[0]) == 6);
    CHECK(e.graph.degree(chain.witnesses[1]) == 6);
    CHECK(prune_coloring(e.graph, c).eliminated);
}

TEST_CASE("every elimination is re-checkable from its witnesses") {
    for (const auto& e : all_entries()) {
        for (const auto& [c, v] : prune(e.graph)) {
            if (!v.eliminated) continue;
            CAPTURE(e.graph.label());
            CAPTURE(rule_name(*v.rule));
            for (int w : v.witnesses) CHECK((w >= 0 && w < e.graph.k()));
            CHECK(recheck(e.graph, c, v));
        }
    }
}

TEST_CASE("a tampered witness fails the re-check") {
    const auto e = find_class(builtin_catalog("k7"), "K7-C2");
    auto c = e.reference("near-survivor");
    auto chain = check_antipodal_chain(e.graph, c);
    auto bad = chain;
    std::swap(bad.witnesses[2], bad.witnesses[4]);
    bad.witnesses[2] = (bad.witnesses[2] + 1) % e.graph.k();
    CHECK_FALSE(recheck(e.graph, c, bad));
}

TEST_CASE("pruning outcome is invariant under graph automorphisms") {
    std::mt19937_64 rng(99);
    auto all = all_entries();
    int checked = 0;
    while (checked < 400) {
        const auto& g = all[rng() % all.size()].graph;
        auto autos = automorphisms(g);
        auto cs = enumerate_colorings(g);
        if (cs.empty()) continue;
        const auto& p = autos[rng() % autos.size()];
        const auto& c = cs[rng() % cs.size()];
        auto pc = permute(g, p, c);
        REQUIRE(is_facet_isosceles(g, pc));
        auto v1 = prune_coloring(g, c);
        auto v2 = prune_coloring(g, pc);
        CAPTURE(g.label());
        CHECK(status(v1) == status(v2));
        CHECK(v1.antipodal_pairs.size() == v2.antipodal_pairs.size());
        ++checked;
    }
}

TEST_CASE("automorphism groups") {
    auto warm = builtin_catalog("warmup");
    CHECK(automorphisms(find_class(warm, "K4").graph).size() == 24);
    CHECK(automorphisms(find_class(warm, "K6-C2").graph).size() == 48);
    auto k7 = builtin_catalog("k7");
    CHECK(automorphisms(find_class(k7, "K7-C5").graph).size() == 20);
    for (const auto& e : all_entries()) {
        auto autos = automorphisms(e.graph);
        const auto& id = autos.front();
        for (int i = 0; i < e.graph.k(); ++i) CHECK(id[i] == i);
        for (const auto& p : autos) {
            for (const auto& [u, v] : e.graph.edges()) CHECK(e.graph.adjacent(p[u], p[v]));
        }
    }
}

TEST_CASE("canonical forms are orbit invariants") {
    const auto g = find_class(builtin_catalog("k8"), "K8-C13").graph;
    auto autos = automorphisms(g);
    for (const auto& c : enumerate_colorings(g)) {
        auto canon = canonical_form(g, autos, c);
        CHECK(canon.red <= c.red);
        for (const auto& p : autos) CHECK(canonical_form(g, autos, permute(g, p, c)) == canon);
    }
}

TEST_CASE("eight vertices: survivors appear only in the analyzed classes") {
    const std::set<std::string> analyzed{"K8-C1", "K8-C8", "K8-C10", "K8-C12", "K8-C13", "K8-C14"};
    for (const auto& e : builtin_catalog("k8")) {
        auto r = summarize_pruning(e.graph);
        CAPTURE(e.graph.label());
        if (!analyzed.contains(e.graph.label())) {
            CHECK(r.survivors == 0);
            CHECK(r.forced_equilateral == 0);
        } else {
            CHECK(r.survivors + r.forced_equilateral > 0);
        }
    }
}

TEST_CASE("antipodal pairs deduced for the figured colorings") {
    auto k8 = builtin_catalog("k8");
    SUBCASE("Class 8 has two pairs") {
        const auto& e = find_class(k8, "K8-C8");
        auto pairs = deduce_antipodal_pairs(e.graph, e.reference("figure"));
        CHECK(pairs.size() == 2);
    }
    SUBCASE("Class 12 has one pair") {
        const auto& e = find_class(k8, "K8-C12");
        auto pairs = deduce_antipodal_pairs(e.graph, e.reference("figure"));
        CHECK(pairs.size() == 1);
    }
    SUBCASE("Class 14(i) has diameters AC and EG") {
        const auto& e = find_class(k8, "K8-C14");
        auto pairs = deduce_antipodal_pairs(e.graph, e.reference("i"));
        std::set<std::string> names;
        for (const auto& [u, v] : pairs) {
            std::string a = e.graph.vertex_name(u), b = e.graph.vertex_name(v);
            names.insert(std::min(a, b) + std::max(a, b));
        }
        CHECK(names == std::set<std::string>{"AC", "EG"});
    }
}

TEST_CASE("Class 14 has exactly three survivor orbits, one per figure") {
    const auto e = find_class(builtin_catalog("k8"), "K8-C14");
    const auto& g = e.graph;
    auto autos = automorphisms(g);
    std::vector<EdgeColoring> survivors;
    for (const auto& [c, v] : prune(g)) {
        if (v.survives() && !v.forced_equilateral()) survivors.push_back(c);
    }
    auto orbits = coloring_orbits(g, autos, survivors);
    REQUIRE(orbits.size() == 3);
    std::set<std::uint64_t> canon_orbits;
    for (const auto& o : orbits) canon_orbits.insert(canonical_form(g, autos, o.front()).red);
    std::set<std::uint64_t> canon_refs;
    for (const char* n : {"i", "ii", "iii"}) canon_refs.insert(canonical_form(g, autos, e.reference(n)).red);
    CHECK(canon_orbits == canon_refs);
}

TEST_CASE("forcings near a degree-six vertex eliminate") {
    auto k8 = builtin_catalog("k8");
    const auto& g = find_class(k8, "K8-C13").graph;
    auto r = summarize_pruning(g);
    CHECK(r.eliminated_by.contains(Rule::DefectBAngleDefect));
    for (const auto& [c, v] : prune(g)) {
        if (v.eliminated && *v.rule == Rule::DefectBAngleDefect) {
            CHECK(g.max_degree() >= 6);
            CHECK(v.forcing != Forcing::none);
        }
    }
}
