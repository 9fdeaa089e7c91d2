#include "equifacet/catalog.hpp"
#include "equifacet/errors.hpp"
#include "equifacet/realize.hpp"
#include "equifacet/symmetry.hpp"

#include <cmath>
#include <numbers>

namespace equifacet {

namespace {

// Catalog index of each lettered vertex in the eight-vertex figures.
enum Letter { E = 0, D = 1, C = 2, B = 3, A = 4, H = 5, G = 6, F = 7 };

Point3 at_azimuth(double radius, double degrees, double z) {
    double t = degrees * std::numbers::pi / 180.0;
    return {radius * std::cos(t), radius * std::sin(t), z};
}

std::vector<Point3> antiprism_with_poles(double h) {
    const double rad = std::sqrt(1.0 - h * h);
    std::vector<Point3> p(8);
    p[B] = {0, 0, 1};
    p[G] = {0, 0, -1};
    p[A] = at_azimuth(rad, 0, h);
    p[C] = at_azimuth(rad, 120, h);
    p[E] = at_azimuth(rad, 240, h);
    p[H] = at_azimuth(rad, 60, -h);
    p[D] = at_azimuth(rad, 180, -h);
    p[F] = at_azimuth(rad, 300, -h);
    return p;
}

Realization with_catalog_facets(const PolytopeGraph& g, std::vector<Point3> pts) {
    Realization r;
    r.points = std::move(pts);
    r.facets = g.facets();
    return r;
}

void finish(ClassRealization& out) {
    out.area = surface_area(out.realization);
    out.degenerate = is_degenerate(out.realization);
    out.hull_faces = static_cast<int>(hull_polygons(out.realization.points).size());
}

// Class 14(iii) coordinates, p1..p8, before relabeling.
std::array<Point3, 8> class14iii_p(double h) {
    const double rad = std::sqrt(1.0 - h * h);
    const double den = 1.0 + 3.0 * h * h;
    const double y1 = 2.0 * h / std::sqrt(den);
    const double z1 = -std::sqrt((1.0 - h * h) / den);
    return {Point3{0, y1, z1}, Point3{0, rad, h},   Point3{0, -rad, h},  Point3{0, -y1, z1},
            Point3{y1, 0, -z1}, Point3{rad, 0, -h}, Point3{-rad, 0, -h}, Point3{-y1, 0, -z1}};
}

// p_i lands on catalog vertex kP14[i].
constexpr std::array<int, 8> kP14{0, 3, 5, 6, 2, 1, 7, 4};

}  // namespace

ParametricFamily class10_family() {
    const auto catalog = builtin_catalog("k8");
    PolytopeGraph g = find_class(catalog, "K8-C10").graph;
    ParametricFamily fam;
    fam.class_label = "K8-C10";
    fam.builder = [g](double h) { return with_catalog_facets(g, antiprism_with_poles(h)); };
    // 2(1 - h) = 1 + 3h^2
    fam.constraint = Polynomial({1.0, -2.0, -3.0});
    return fam;
}

ParametricFamily class14iii_family() {
    const auto catalog = builtin_catalog("k8");
    PolytopeGraph g = find_class(catalog, "K8-C14").graph;
    ParametricFamily fam;
    fam.class_label = "K8-C14";
    fam.builder = [g](double h) {
        auto p = class14iii_p(h);
        std::vector<Point3> pts(8);
        for (int i = 0; i < 8; ++i) pts[kP14[i]] = p[i];
        return with_catalog_facets(g, std::move(pts));
    };
    // (1 - h^2)(1 + 3h^2) = 1 + h^2, i.e. h^2 - 3h^4 = 0
    fam.constraint = Polynomial({0.0, 0.0, 1.0, 0.0, -3.0});
    return fam;
}

ClassRealization realize_class10() {
    ParametricFamily fam = class10_family();
    ClassRealization out;
    out.class_label = fam.class_label;
    out.variant = "figure";
    out.h = find_root(fam.constraint, 0.0, 1.0, 1e-14);
    out.a = std::sqrt(3.0 * (1.0 - out.h * out.h));
    out.b = std::sqrt(2.0 * (1.0 - out.h));
    out.realization = fam.builder(out.h);
    finish(out);
    return out;
}

ClassRealization realize_class14iii() {
    ParametricFamily fam = class14iii_family();
    ClassRealization out;
    out.class_label = fam.class_label;
    out.variant = "iii";
    // h = 0 is also a root; it collapses the two latitude pairs.
    out.h = find_root(fam.constraint, 0.1, 1.0, 1e-14);
    auto p = class14iii_p(out.h);
    out.a = distance(p[1], p[2]);
    out.b = distance(p[0], p[1]);
    out.realization = fam.builder(out.h);
    finish(out);
    return out;
}

ClassRealization realize_class14i() {
    const auto catalog = builtin_catalog("k8");
    const PolytopeGraph& g = find_class(catalog, "K8-C14").graph;
    const double r3 = std::sqrt(3.0) / 2.0;
    std::vector<Point3> pts{{0, 0, 1},  {-0.5, r3, 0},  {-1, 0, 0},  {0, -r3, 0.5},
                            {1, 0, 0},  {0, -r3, -0.5}, {0, 0, -1},  {0.5, r3, 0}};
    ClassRealization out;
    out.class_label = "K8-C14";
    out.variant = "i";
    out.h = 0.0;
    out.realization = with_catalog_facets(g, std::move(pts));
    out.a = distance(out.realization.points[1], out.realization.points[2]);
    out.b = distance(out.realization.points[0], out.realization.points[1]);
    finish(out);
    return out;
}

ClassRealization realize_bipyramid(const PolytopeGraph& g, int n) {
    Realization geo = bipyramid(n);
    if (g.k() != n + 2) throw InvalidArgument(g.label() + " does not have n + 2 vertices");
    PolytopeGraph shape = PolytopeGraph::from_facets("bipyramid", n + 2, geo.facets);
    auto iso = find_isomorphism(shape, g);
    if (!iso) throw InvalidArgument(g.label() + " is not a bipyramid over an " + std::to_string(n) + "-gon");
    std::vector<Point3> pts(n + 2);
    for (int i = 0; i < n + 2; ++i) pts[(*iso)[i]] = geo.points[i];
    ClassRealization out;
    out.class_label = g.label();
    out.variant = "bipyramid";
    out.realization = with_catalog_facets(g, std::move(pts));
    out.a = distance(geo.points[0], geo.points[1]);
    out.b = distance(geo.points[0], geo.points[n]);
    finish(out);
    return out;
}

std::vector<Point3> eight_vertex_maximizer() {
    const double s8 = std::sqrt(8.0) / 3.0;
    const double s2 = std::sqrt(2.0) / 3.0;
    const double s6 = std::sqrt(6.0) / 3.0;
    const double t = 1.0 / 3.0;
    return {{0, 0, 1},  {0, 0, -1},   {s8, 0, t},  {-s2, s6, t},
            {-s2, -s6, t}, {s2, s6, -t}, {-s8, 0, -t}, {s2, -s6, -t}};
}

Class12Refutation refute_class12() {
    const auto catalog = builtin_catalog("k8");
    const PolytopeGraph& g = find_class(catalog, "K8-C12").graph;
    Class12Refutation out;
    // 3(1 - h^2) + 2(1 - h) = 4, i.e. -(3h - 1)(h + 1) = 0
    Polynomial p({1.0, -2.0, -3.0});
    out.candidate_roots = bracket_roots(p, -1.0, 1.0, 2000, 1e-14);
    for (double r : out.candidate_roots) {
        if (r > -1.0 && r < 1.0) out.h = r;
    }
    out.a = std::sqrt(3.0 * (1.0 - out.h * out.h));
    out.b = std::sqrt(2.0 * (1.0 - out.h));
    out.forced = with_catalog_facets(g, antiprism_with_poles(out.h));
    out.hull = convex_hull(out.forced.points);
    out.hull_faces = static_cast<int>(hull_polygons(out.forced.points).size());

    auto canon = [](std::vector<Facet> fs) {
        for (auto& f : fs) std::sort(f.begin(), f.end());
        std::sort(fs.begin(), fs.end());
        return fs;
    };
    out.hull_matches_class_facets = canon(out.hull.facets) == canon(g.facets());
    out.class_facets_convex = check_convex_position(out.forced).weakly_convex;
    out.refuted = !out.hull_matches_class_facets || !out.class_facets_convex;
    return out;
}

SnubRefutation refute_snub_disphenoid() {
    SnubRefutation out;
    Polynomial cubic({-1.0, 4.0, 11.0, 2.0});
    out.q = find_root(cubic, 0.0, 1.0, 1e-14);
    out.residual = std::abs(cubic(out.q));
    out.r = std::sqrt(out.q);
    out.s = std::sqrt((1.0 - out.q) / (2.0 * out.q));
    out.t = std::sqrt(2.0 - 2.0 * out.q);
    out.radius_sq_a = out.r * out.r + out.t * out.t;
    out.radius_sq_b = 1.0 + out.s * out.s;

    const double r = out.r;
    const double s = out.s;
    const double t = out.t;
    std::vector<Point3> listed{{t, r, 0}, {-t, r, 0}, {0, -r, t}, {0, -r, -t},
                               {1, s, 0}, {-1, s, 0}, {0, s, 1}, {0, s, -1}};
    std::vector<double> distinct;
    for (const auto& pt : listed) {
        double n = norm(pt);
        out.listed_norms.push_back(n);
        bool seen = false;
        for (double d : distinct) seen = seen || std::abs(d - n) < 1e-9;
        if (!seen) distinct.push_back(n);
    }
    out.distinct_norms = static_cast<int>(distinct.size());

    std::vector<Point3> corrected = listed;
    corrected[4].y = corrected[5].y = -s;
    Realization hull = convex_hull(corrected);
    bool all_two = hull.facets.size() == 12;
    for (const auto& e : facet_edges(hull.facets)) {
        all_two = all_two && std::abs(distance(corrected[e[0]], corrected[e[1]]) - 2.0) < 1e-9;
    }
    out.corrected_is_deltahedron = all_two;
    out.refuted = std::abs(out.radius_sq_a - out.radius_sq_b) > 0.01 && out.distinct_norms == 2;
    return out;
}

EquilateralBipyramidCheck check_equilateral_pentagonal_bipyramid() {
    EquilateralBipyramidCheck out;
    out.equator_circumradius = 1.0 / (2.0 * std::sin(std::numbers::pi / 5.0));
    out.apex_height = std::sqrt(1.0 - out.equator_circumradius * out.equator_circumradius);
    // By symmetry the circumcentre would be the equator's centre, so the
    // apexes would have to sit at the equator's circumradius.
    out.center_offset = std::abs(out.equator_circumradius - out.apex_height);
    out.inscribable = out.center_offset < 1e-9;
    return out;
}

}  // namespace equifacet
