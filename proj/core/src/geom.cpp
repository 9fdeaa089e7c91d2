#include "equifacet/geom.hpp"

#include "equifacet/errors.hpp"

#include <algorithm>
#include <map>
#include <numbers>
#include <string>

namespace equifacet {

double FacetShape::leg() const {
    if (kind == ShapeKind::isosceles && std::abs(lengths[1] - lengths[0]) <= kShapeTol) return lengths[0];
    return lengths[2];
}

double FacetShape::base() const {
    if (kind == ShapeKind::isosceles && std::abs(lengths[1] - lengths[0]) <= kShapeTol) return lengths[2];
    return lengths[0];
}

double triangle_area(const Point3& a, const Point3& b, const Point3& c) {
    return 0.5 * norm(cross(b - a, c - a));
}

double surface_area(const Realization& r) {
    double s = 0.0;
    for (const auto& f : r.facets) s += triangle_area(r.points[f[0]], r.points[f[1]], r.points[f[2]]);
    return s;
}

namespace {

std::array<double, 3> sorted_lengths(const Realization& r, const Facet& f) {
    const auto& p = r.points;
    std::array<double, 3> l{distance(p[f[0]], p[f[1]]), distance(p[f[1]], p[f[2]]), distance(p[f[0]], p[f[2]])};
    std::sort(l.begin(), l.end());
    return l;
}

FacetShape shape_of(const std::array<double, 3>& l) {
    FacetShape s;
    s.lengths = l;
    bool low = std::abs(l[1] - l[0]) <= kShapeTol;
    bool high = std::abs(l[2] - l[1]) <= kShapeTol;
    if (low && high) {
        s.kind = ShapeKind::equilateral;
    } else if (low != high) {
        s.kind = ShapeKind::isosceles;
    } else {
        s.kind = ShapeKind::scalene;
    }
    return s;
}

}  // namespace

FacetClassification classify_facets(const Realization& r) {
    FacetClassification c;
    for (const auto& f : r.facets) c.shapes.push_back(shape_of(sorted_lengths(r, f)));

    double spread = 0.0;
    for (std::size_t i = 0; i < c.shapes.size(); ++i) {
        for (std::size_t j = i + 1; j < c.shapes.size(); ++j) {
            for (int t = 0; t < 3; ++t) {
                spread = std::max(spread, std::abs(c.shapes[i].lengths[t] - c.shapes[j].lengths[t]));
            }
        }
    }
    c.max_triple_spread = spread;
    c.congruent = !c.shapes.empty() && spread <= kShapeTol;
    c.spherical = all_on_unit_sphere(r.points);

    bool all_iso = std::all_of(c.shapes.begin(), c.shapes.end(),
                               [](const FacetShape& s) { return s.kind == ShapeKind::isosceles; });
    bool all_eq = std::all_of(c.shapes.begin(), c.shapes.end(),
                              [](const FacetShape& s) { return s.kind == ShapeKind::equilateral; });
    c.equifacetal = c.congruent && (all_iso || all_eq) && c.spherical;
    return c;
}

double congruence_defect(const Realization& r) {
    if (r.facets.empty()) return 0.0;
    std::vector<std::array<double, 3>> triples;
    triples.reserve(r.facets.size());
    std::array<double, 3> mean{};
    for (const auto& f : r.facets) {
        triples.push_back(sorted_lengths(r, f));
        for (int t = 0; t < 3; ++t) mean[t] += triples.back()[t];
    }
    for (double& m : mean) m /= static_cast<double>(triples.size());
    double v = 0.0;
    for (const auto& t : triples) {
        for (int i = 0; i < 3; ++i) v += (t[i] - mean[i]) * (t[i] - mean[i]);
    }
    return v / static_cast<double>(triples.size());
}

double bipyramid_max_area(int n) {
    if (n < 3) throw InvalidArgument("bipyramid needs n >= 3, got " + std::to_string(n));
    const double t = std::numbers::pi / n;
    return 2.0 * n * std::sin(t) * std::sqrt(1.0 + std::cos(t) * std::cos(t));
}

AsymptoticBounds asymptotic_bounds(int k) {
    if (k < 4) throw InvalidArgument("asymptotic bounds need K >= 4, got " + std::to_string(k));
    constexpr double pi = std::numbers::pi;
    const double sqrt3 = std::numbers::sqrt3;
    const double kk = static_cast<double>(k);
    return {4.0 * pi * (1.0 - (2.0 * pi / sqrt3) / kk), 4.0 * pi * (1.0 - (10.0 * pi / (9.0 * sqrt3)) / kk)};
}

bool on_unit_sphere(const Point3& p, double tol) { return std::abs(dot(p, p) - 1.0) <= tol; }

bool all_on_unit_sphere(std::span<const Point3> pts, double tol) {
    return std::all_of(pts.begin(), pts.end(), [tol](const Point3& p) { return on_unit_sphere(p, tol); });
}

bool all_distinct(std::span<const Point3> pts, double tol) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            if (distance(pts[i], pts[j]) <= tol) return false;
        }
    }
    return true;
}

std::vector<std::array<int, 2>> facet_edges(std::span<const Facet> facets) {
    std::vector<std::array<int, 2>> e;
    for (const auto& f : facets) {
        for (int i = 0; i < 3; ++i) {
            int a = f[i];
            int b = f[(i + 1) % 3];
            e.push_back({std::min(a, b), std::max(a, b)});
        }
    }
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    return e;
}

ConvexityReport check_convex_position(const Realization& r, double tol) {
    ConvexityReport rep;
    rep.weakly_convex = true;
    rep.strictly_convex = true;
    const auto& p = r.points;

    Point3 centroid;
    for (const auto& q : p) centroid += q;
    centroid = centroid / static_cast<double>(p.size());

    std::vector<Point3> normals;
    for (const auto& f : r.facets) {
        Point3 n = cross(p[f[1]] - p[f[0]], p[f[2]] - p[f[0]]);
        double len = norm(n);
        if (len <= tol) {
            rep.weakly_convex = rep.strictly_convex = false;
            normals.push_back({});
            continue;
        }
        n = n / len;
        if (dot(n, p[f[0]] - centroid) < 0) n = -n;
        normals.push_back(n);
        const double d = dot(n, p[f[0]]);
        for (std::size_t v = 0; v < p.size(); ++v) {
            int iv = static_cast<int>(v);
            if (iv == f[0] || iv == f[1] || iv == f[2]) continue;
            double s = dot(n, p[v]) - d;
            if (s > tol) rep.weakly_convex = false;
            if (s > -tol) rep.strictly_convex = false;
        }
    }

    std::map<std::array<int, 2>, std::vector<int>> owners;
    for (std::size_t i = 0; i < r.facets.size(); ++i) {
        const auto& f = r.facets[i];
        for (int e = 0; e < 3; ++e) {
            int a = f[e];
            int b = f[(e + 1) % 3];
            owners[{std::min(a, b), std::max(a, b)}].push_back(static_cast<int>(i));
        }
    }
    for (const auto& [edge, fs] : owners) {
        if (fs.size() != 2) {
            ++rep.edges_not_in_two_facets;
            continue;
        }
        const Facet& g = r.facets[fs[1]];
        const Facet& f = r.facets[fs[0]];
        int apex = g[0] + g[1] + g[2] - edge[0] - edge[1];
        double s = dot(normals[fs[0]], p[apex] - p[f[0]]);
        if (std::abs(s) <= tol) ++rep.coplanar_adjacent_pairs;
    }
    if (rep.edges_not_in_two_facets > 0) rep.weakly_convex = rep.strictly_convex = false;
    if (rep.coplanar_adjacent_pairs > 0) rep.strictly_convex = false;
    return rep;
}

bool is_degenerate(const Realization& r, double tol) {
    return check_convex_position(r, tol).coplanar_adjacent_pairs > 0;
}

bool same_distance_spectrum(std::span<const Point3> a, std::span<const Point3> b, double tol) {
    if (a.size() != b.size()) return false;
    auto spectrum = [](std::span<const Point3> p) {
        std::vector<double> d;
        for (std::size_t i = 0; i < p.size(); ++i) {
            for (std::size_t j = i + 1; j < p.size(); ++j) d.push_back(distance(p[i], p[j]));
        }
        std::sort(d.begin(), d.end());
        return d;
    };
    auto da = spectrum(a);
    auto db = spectrum(b);
    for (std::size_t i = 0; i < da.size(); ++i) {
        if (std::abs(da[i] - db[i]) > tol) return false;
    }
    return true;
}

Realization bipyramid(int n) {
    if (n < 3) throw InvalidArgument("bipyramid needs n >= 3, got " + std::to_string(n));
    Realization r;
    for (int i = 0; i < n; ++i) {
        double t = 2.0 * std::numbers::pi * i / n;
        r.points.push_back({std::cos(t), std::sin(t), 0.0});
    }
    r.points.push_back({0, 0, 1});
    r.points.push_back({0, 0, -1});
    for (int i = 0; i < n; ++i) {
        int j = (i + 1) % n;
        r.facets.push_back({n, i, j});
        r.facets.push_back({n + 1, j, i});
    }
    return r;
}

Realization regular_tetrahedron() {
    const double s29 = std::sqrt(2.0 / 9.0);
    const double s23 = std::sqrt(2.0 / 3.0);
    std::vector<Point3> p{{std::sqrt(8.0 / 9.0), 0, -1.0 / 3.0}, {-s29, s23, -1.0 / 3.0}, {-s29, -s23, -1.0 / 3.0}, {0, 0, 1}};
    return convex_hull(p);
}

Realization regular_octahedron() { return bipyramid(4); }

Realization regular_icosahedron() {
    const double phi = std::numbers::phi;
    std::vector<Point3> p;
    for (double s1 : {-1.0, 1.0}) {
        for (double s2 : {-phi, phi}) {
            p.push_back(normalized(Point3{0, s1, s2}));
            p.push_back(normalized(Point3{s1, s2, 0}));
            p.push_back(normalized(Point3{s2, 0, s1}));
        }
    }
    return convex_hull(p);
}

}  // namespace equifacet
