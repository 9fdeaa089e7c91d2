#include "test_support.hpp"

#include <equifacet/errors.hpp>
#include <equifacet/geom.hpp>
#include <equifacet/realize.hpp>

#include <doctest.h>

#include <algorithm>
#include <map>
#include <numbers>
#include <set>

using namespace equifacet;
using testsupport::heron;
using testsupport::random_rotation;
using testsupport::random_unit;

namespace {

std::map<std::array<int, 2>, int> edge_multiplicity(const Realization& r) {
    std::map<std::array<int, 2>, int> m;
    for (const auto& f : r.facets) {
        for (int i = 0; i < 3; ++i) {
            int u = f[i], v = f[(i + 1) % 3];
            ++m[{std::min(u, v), std::max(u, v)}];
        }
    }
    return m;
}

std::vector<Point3> octahedron_points() { return {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}}; }

}  // namespace

TEST_CASE("triangle area on small fixed inputs") {
    CHECK(triangle_area({0, 0, 0}, {1, 0, 0}, {0, 1, 0}) == doctest::Approx(0.5));
    CHECK(triangle_area({0, 0, 0}, {1, 1, 1}, {2, 2, 2}) == 0.0);
    CHECK(triangle_area({1, 2, 3}, {1, 2, 3}, {4, 5, 6}) == 0.0);
}

TEST_CASE("cross-product area agrees with Heron on random triangles") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    int checked = 0;
    while (checked < 500) {
        Point3 a{u(rng), u(rng), u(rng)}, b{u(rng), u(rng), u(rng)}, c{u(rng), u(rng), u(rng)};
        double h = heron(distance(a, b), distance(b, c), distance(c, a));
        if (h < 1e-3) continue;
        CHECK(std::abs(triangle_area(a, b, c) - h) <= 1e-10);
        ++checked;
    }
}

TEST_CASE("convex hull of the coordinate cross polytope") {
    auto pts = octahedron_points();
    Realization r = convex_hull(pts);
    REQUIRE(r.facets.size() == 8);
    for (const auto& f : r.facets) {
        CHECK(triangle_area(r.points[f[0]], r.points[f[1]], r.points[f[2]]) == doctest::Approx(std::sqrt(3.0) / 2));
    }
    CHECK(surface_area(r) == doctest::Approx(4 * std::sqrt(3.0)).epsilon(1e-12));
}

TEST_CASE("hull facets are oriented away from the centroid") {
    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 50; ++rep) {
        std::vector<Point3> pts;
        for (int i = 0; i < 9; ++i) pts.push_back(random_unit(rng));
        Realization r = convex_hull(pts);
        Point3 centroid{};
        for (const auto& p : pts) centroid += p;
        centroid = centroid / static_cast<double>(pts.size());
        for (const auto& f : r.facets) {
            const Point3 &a = r.points[f[0]], &b = r.points[f[1]], &c = r.points[f[2]];
            Point3 n = cross(b - a, c - a);
            CHECK(dot(n, (a + b + c) / 3.0 - centroid) > 0.0);
        }
    }
}

TEST_CASE("tetrahedron from the drawn coordinates") {
    Realization t = regular_tetrahedron();
    CHECK(all_on_unit_sphere(t.points));
    Realization r = convex_hull(t.points);
    CHECK(r.facets.size() == 4);
    CHECK(surface_area(r) == doctest::Approx(8 / std::sqrt(3.0)).epsilon(1e-12));
}

TEST_CASE("square pyramid splits its base into two triangles") {
    std::vector<Point3> pts{{1, 1, 0}, {-1, 1, 0}, {-1, -1, 0}, {1, -1, 0}, {0, 0, 1}};
    Realization r = convex_hull(pts);
    CHECK(r.facets.size() == 6);
    CHECK(check_convex_position(r).weakly_convex);
    CHECK(hull_polygons(pts).size() == 5);
    std::set<int> used;
    for (const auto& f : r.facets) used.insert(f.begin(), f.end());
    CHECK(used.size() == 5);
}

TEST_CASE("flat or tiny inputs are rejected") {
    std::vector<Point3> three{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}};
    CHECK_THROWS_AS(convex_hull(three), DegenerateInput);
    std::vector<Point3> flat{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0.3, 0.2, 0}};
    CHECK_THROWS_AS(convex_hull(flat), DegenerateInput);
}

TEST_CASE("surface area is invariant under rotations and reflections") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> kdist(4, 13);
    for (int rep = 0; rep < 250; ++rep) {
        int k = kdist(rng);
        std::vector<Point3> pts;
        for (int i = 0; i < k; ++i) pts.push_back(random_unit(rng));
        auto rot = random_rotation(rng);
        std::vector<Point3> moved;
        for (const auto& p : pts) moved.push_back(rot(p));
        double a = surface_area(convex_hull(pts));
        double b = surface_area(convex_hull(moved));
        CHECK(std::abs(a - b) <= 1e-9);
    }
}

TEST_CASE("random spherical configurations satisfy the Euler counts") {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> kdist(4, 13);
    for (int rep = 0; rep < 300; ++rep) {
        int k = kdist(rng);
        std::vector<Point3> pts;
        for (int i = 0; i < k; ++i) pts.push_back(random_unit(rng));
        Realization r = convex_hull(pts);
        auto edges = edge_multiplicity(r);
        CAPTURE(k);
        CHECK(r.facets.size() == static_cast<std::size_t>(2 * k - 4));
        CHECK(edges.size() == static_cast<std::size_t>(3 * k - 6));
        CHECK(std::all_of(edges.begin(), edges.end(), [](const auto& e) { return e.second == 2; }));
        CHECK(check_convex_position(r).strictly_convex);
    }
}

TEST_CASE("bipyramid closed form matches the hull for n = 3..10") {
    for (int n = 3; n <= 10; ++n) {
        Realization b = bipyramid(n);
        CHECK(all_on_unit_sphere(b.points));
        double hull_area = surface_area(convex_hull(b.points));
        CAPTURE(n);
        CHECK(std::abs(bipyramid_max_area(n) - hull_area) <= 1e-9);
    }
    CHECK(bipyramid_max_area(3) == doctest::Approx(1.5 * std::sqrt(15.0)).epsilon(1e-12));
    CHECK(bipyramid_max_area(5) == doctest::Approx(1.25 * std::sqrt(50 - 6 * std::sqrt(5.0))).epsilon(1e-12));
    CHECK(bipyramid_max_area(6) == doctest::Approx(3 * std::sqrt(7.0)).epsilon(1e-12));
    CHECK_THROWS_AS(bipyramid_max_area(2), InvalidArgument);
}

TEST_CASE("the regular solids have their tabulated areas") {
    CHECK(surface_area(convex_hull(regular_octahedron().points)) == doctest::Approx(4 * std::sqrt(3.0)));
    Realization ico = regular_icosahedron();
    CHECK(all_on_unit_sphere(ico.points));
    Realization hull = convex_hull(ico.points);
    CHECK(hull.facets.size() == 20);
    CHECK(surface_area(hull) == doctest::Approx(2 * std::sqrt(75.0) - 2 * std::sqrt(15.0)).epsilon(1e-12));
}

TEST_CASE("facet classification") {
    SUBCASE("octahedron is equilateral and congruent") {
        auto fc = classify_facets(convex_hull(octahedron_points()));
        CHECK(fc.congruent);
        CHECK(fc.equifacetal);
        CHECK(std::all_of(fc.shapes.begin(), fc.shapes.end(),
                          [](const FacetShape& s) { return s.kind == ShapeKind::equilateral; }));
    }
    SUBCASE("a perturbed octahedron loses congruence") {
        auto pts = octahedron_points();
        double t = 0.1;
        pts[4] = {std::sin(t), 0, std::cos(t)};
        auto fc = classify_facets(convex_hull(pts));
        CHECK_FALSE(fc.congruent);
        CHECK_FALSE(fc.equifacetal);
        CHECK(fc.spherical);
    }
    SUBCASE("the eight-vertex maximizer has a two-value edge spectrum") {
        Realization r = convex_hull(eight_vertex_maximizer());
        auto fc = classify_facets(r);
        CHECK(fc.congruent);
        CHECK(fc.equifacetal);
        std::set<long long> lengths;
        for (const auto& e : facet_edges(r.facets)) {
            lengths.insert(std::llround(distance(r.points[e[0]], r.points[e[1]]) * 1e8));
        }
        CHECK(lengths.size() == 2);
        for (const auto& s : fc.shapes) {
            REQUIRE(s.kind == ShapeKind::isosceles);
            CHECK(s.base() == doctest::Approx(std::sqrt(8.0 / 3.0)).epsilon(1e-10));
            CHECK(s.leg() == doctest::Approx(std::sqrt(4.0 / 3.0)).epsilon(1e-10));
        }
    }
    SUBCASE("verdict does not depend on vertex labels") {
        std::mt19937_64 rng(3);
        for (int rep = 0; rep < 40; ++rep) {
            std::vector<Point3> pts;
            bool regular = rep % 2 == 0;
            if (regular) {
                pts = regular_icosahedron().points;
            } else {
                for (int i = 0; i < 8; ++i) pts.push_back(random_unit(rng));
            }
            Realization r = convex_hull(pts);
            std::vector<int> perm(r.points.size());
            for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
            std::shuffle(perm.begin(), perm.end(), rng);
            Realization q;
            q.points.resize(r.points.size());
            for (std::size_t i = 0; i < perm.size(); ++i) q.points[perm[i]] = r.points[i];
            for (const auto& f : r.facets) q.facets.push_back({perm[f[0]], perm[f[1]], perm[f[2]]});
            CHECK(classify_facets(q).congruent == classify_facets(r).congruent);
            CHECK(classify_facets(q).congruent == regular);
        }
    }
}

TEST_CASE("congruence defect vanishes only on congruent facets") {
    CHECK(congruence_defect(convex_hull(regular_icosahedron().points)) <= 1e-20);
    std::mt19937_64 rng(8);
    std::vector<Point3> pts;
    for (int i = 0; i < 8; ++i) pts.push_back(random_unit(rng));
    CHECK(congruence_defect(convex_hull(pts)) > 1e-4);
}

TEST_CASE("asymptotic bounds") {
    auto formula = [](int k) {
        double pi = std::numbers::pi;
        return std::pair{4 * pi * (1 - 2 * pi / std::sqrt(3.0) / k), 4 * pi * (1 - 10 * pi / (9 * std::sqrt(3.0)) / k)};
    };
    for (int k : {4, 5, 6, 7, 8, 12, 100}) {
        auto b = asymptotic_bounds(k);
        auto [lo, hi] = formula(k);
        CHECK(b.lower == doctest::Approx(lo).epsilon(1e-14));
        CHECK(b.upper == doctest::Approx(hi).epsilon(1e-14));
    }
    auto far = asymptotic_bounds(100000000);
    CHECK(far.lower == doctest::Approx(4 * std::numbers::pi).epsilon(1e-6));
    CHECK(far.upper == doctest::Approx(4 * std::numbers::pi).epsilon(1e-6));

    auto b8 = asymptotic_bounds(8);
    CHECK(b8.lower < 8.0);
    CHECK(8.0 < b8.upper);
    auto b12 = asymptotic_bounds(12);
    CHECK(b12.lower <= 9.5745);
    CHECK(9.5745 <= b12.upper);
    CHECK_THROWS_AS(asymptotic_bounds(3), InvalidArgument);
}

TEST_CASE("known maxima lie between the asymptotic bounds") {
    const std::map<int, double> maxima{{4, 8 / std::sqrt(3.0)},
                                       {5, 1.5 * std::sqrt(15.0)},
                                       {6, 4 * std::sqrt(3.0)},
                                       {7, bipyramid_max_area(5)},
                                       {8, 8.0},
                                       {12, 2 * std::sqrt(75.0) - 2 * std::sqrt(15.0)}};
    for (const auto& [k, v] : maxima) {
        auto b = asymptotic_bounds(k);
        CAPTURE(k);
        CHECK(b.lower <= v);
        CHECK(v <= b.upper);
    }
}

TEST_CASE("sphere membership and distinctness use their own tolerances") {
    CHECK(on_unit_sphere({1, 0, 0}));
    CHECK_FALSE(on_unit_sphere({1 + 1e-9, 0, 0}));
    std::vector<Point3> dup{{1, 0, 0}, {1 + 1e-12, 0, 0}};
    CHECK_FALSE(all_distinct(dup));
}

TEST_CASE("coplanar adjacent facets are flagged as degenerate") {
    std::vector<Point3> cube;
    double s = 1 / std::sqrt(3.0);
    for (int i = 0; i < 8; ++i) cube.push_back({(i & 1) ? s : -s, (i & 2) ? s : -s, (i & 4) ? s : -s});
    Realization r = convex_hull(cube);
    CHECK(r.facets.size() == 12);
    CHECK(is_degenerate(r));
    CHECK(surface_area(r) == doctest::Approx(8.0));
    CHECK(hull_polygons(cube).size() == 6);
    CHECK_FALSE(is_degenerate(convex_hull(regular_icosahedron().points)));
}
