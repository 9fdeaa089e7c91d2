#include "equifacet/catalog.hpp"
#include "equifacet/realize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace equifacet {

namespace {

enum Letter { E = 0, D = 1, C = 2, B = 3, A = 4, H = 5, G = 6, F = 7 };

const PolytopeGraph& class8_graph() {
    static const std::vector<CatalogEntry> catalog = builtin_catalog("k8");
    return find_class(catalog, "K8-C8").graph;
}

EdgeColoring class8_coloring() {
    static const std::vector<CatalogEntry> catalog = builtin_catalog("k8");
    return find_class(catalog, "K8-C8").reference("figure");
}

// The rectangle ADEH spans the xz great circle (E = -H, A = -D), and the
// isosceles facets on AE and DH put B, F, C, G on the equator at the leg
// distance. Bit i of `signs` flips the y sign of B, F, C, G respectively.
bool class8_points(double h, int signs, std::array<Point3, 8>& p) {
    const double rad2 = 1.0 - h * h;
    if (rad2 <= 0.0) return false;
    const double rad = std::sqrt(rad2);
    const double cx = (2.0 * h * h - 1.0) / rad;
    if (std::abs(cx) > 1.0) return false;
    const double sy = std::sqrt(1.0 - cx * cx);
    p[A] = {rad, 0, h};
    p[E] = {rad, 0, -h};
    p[H] = -p[E];
    p[D] = -p[A];
    auto sgn = [signs](int bit) { return ((signs >> bit) & 1) != 0 ? -1.0 : 1.0; };
    p[B] = {cx, sgn(0) * sy, 0};
    p[F] = {cx, sgn(1) * sy, 0};
    p[C] = {-cx, sgn(2) * sy, 0};
    p[G] = {-cx, sgn(3) * sy, 0};
    return true;
}

double coplanarity(const Point3& a, const Point3& b, const Point3& c, const Point3& d) {
    return std::abs(dot(cross(b - a, c - a), d - a));
}

double min_pair_distance(const std::array<Point3, 8>& p) {
    double m = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 8; ++i) {
        for (int j = i + 1; j < 8; ++j) m = std::min(m, distance(p[i], p[j]));
    }
    return m;
}

}  // namespace

double class8_residual(double h, int sign_pattern) {
    std::array<Point3, 8> p;
    if (!class8_points(h, sign_pattern, p)) return -1.0;
    const PolytopeGraph& g = class8_graph();
    const EdgeColoring c = class8_coloring();
    double lo[2] = {std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
    double hi[2] = {-1.0, -1.0};
    for (int i = 0; i < g.edge_count(); ++i) {
        const auto& e = g.edges()[i];
        double d2 = dot(p[e[0]] - p[e[1]], p[e[0]] - p[e[1]]);
        int col = static_cast<int>(c.color(i));
        lo[col] = std::min(lo[col], d2);
        hi[col] = std::max(hi[col], d2);
    }
    return std::max(hi[0] - lo[0], hi[1] - lo[1]);
}

Class8Refutation refute_class8(int samples) {
    Class8Refutation out;
    out.grid_samples = samples;
    out.sign_patterns = 16;
    out.min_residual_away_from_roots = std::numeric_limits<double>::infinity();

    for (int signs = 0; signs < 16; ++signs) {
        std::vector<double> hs(samples);
        std::vector<double> rs(samples);
        for (int i = 0; i < samples; ++i) {
            hs[i] = -1.0 + 2.0 * (i + 1) / (samples + 1);
            rs[i] = class8_residual(hs[i], signs);
        }
        std::vector<double> found;
        for (int i = 0; i < samples; ++i) {
            if (rs[i] < 0 || rs[i] > 1e-2) continue;
            bool left_ok = i == 0 || rs[i - 1] < 0 || rs[i] <= rs[i - 1];
            bool right_ok = i + 1 == samples || rs[i + 1] < 0 || rs[i] <= rs[i + 1];
            if (!left_ok || !right_ok) continue;

            // Golden-section descent on the bracketing cells.
            double lo = i == 0 ? hs[i] : hs[i - 1];
            double hi = i + 1 == samples ? hs[i] : hs[i + 1];
            auto f = [signs](double h) {
                double r = class8_residual(h, signs);
                return r < 0 ? std::numeric_limits<double>::infinity() : r;
            };
            const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
            double x1 = hi - phi * (hi - lo);
            double x2 = lo + phi * (hi - lo);
            double f1 = f(x1);
            double f2 = f(x2);
            for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
                if (f1 <= f2) {
                    hi = x2;
                    x2 = x1;
                    f2 = f1;
                    x1 = hi - phi * (hi - lo);
                    f1 = f(x1);
                } else {
                    lo = x1;
                    x1 = x2;
                    f1 = f2;
                    x2 = lo + phi * (hi - lo);
                    f2 = f(x2);
                }
            }
            double h = f1 <= f2 ? x1 : x2;
            double r = f(h);
            if (r > 1e-9) continue;

            std::array<Point3, 8> p;
            class8_points(h, signs, p);
            Class8Root root;
            root.sign_pattern = signs;
            root.h = h;
            root.residual = r;
            root.min_distance = min_pair_distance(p);
            root.coplanar_abef = coplanarity(p[A], p[B], p[E], p[F]) < 1e-9;
            root.coplanar_cdgh = coplanarity(p[C], p[D], p[G], p[H]) < 1e-9;
            out.roots.push_back(root);
            found.push_back(h);
        }
        for (int i = 0; i < samples; ++i) {
            if (rs[i] < 0) continue;
            bool near = std::any_of(found.begin(), found.end(), [&](double h) { return std::abs(h - hs[i]) < 0.05; });
            if (!near) out.min_residual_away_from_roots = std::min(out.min_residual_away_from_roots, rs[i]);
        }
    }

    out.refuted = std::all_of(out.roots.begin(), out.roots.end(), [](const Class8Root& r) {
        return r.min_distance < 1e-6 || (r.coplanar_abef && r.coplanar_cdgh);
    });
    return out;
}

}  // namespace equifacet
