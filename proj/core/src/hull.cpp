#include "equifacet/errors.hpp"
#include "equifacet/geom.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

namespace equifacet {

namespace {

constexpr double kVisibleTol = 1e-10;
constexpr double kPlaneTol = 1e-9;

struct Face {
    std::array<int, 3> v{};
    Point3 n;
    double d = 0.0;
    bool alive = true;
};

Face make_face(std::span<const Point3> pts, int a, int b, int c, const Point3& interior) {
    Face f;
    f.v = {a, b, c};
    f.n = cross(pts[b] - pts[a], pts[c] - pts[a]);
    double len = norm(f.n);
    f.n = f.n / len;
    f.d = dot(f.n, pts[a]);
    if (dot(f.n, interior) > f.d) {
        std::swap(f.v[1], f.v[2]);
        f.n = -f.n;
        f.d = -f.d;
    }
    return f;
}

double point_line_distance(const Point3& p, const Point3& a, const Point3& b) {
    return norm(cross(p - a, b - a)) / norm(b - a);
}

std::vector<Face> incremental_hull(std::span<const Point3> pts) {
    const int n = static_cast<int>(pts.size());
    if (n < 4) {
        throw DegenerateInput("convex hull needs at least 4 points, got " + std::to_string(n));
    }

    int i0 = 0;
    int i1 = 0;
    double best = 0.0;
    for (int i = 1; i < n; ++i) {
        double d = distance(pts[i], pts[i0]);
        if (d > best) {
            best = d;
            i1 = i;
        }
    }
    if (best <= kDistinctTol) throw DegenerateInput("all points coincide");

    int i2 = -1;
    best = 0.0;
    for (int i = 0; i < n; ++i) {
        double d = point_line_distance(pts[i], pts[i0], pts[i1]);
        if (d > best) {
            best = d;
            i2 = i;
        }
    }
    if (best <= kDistinctTol) throw DegenerateInput("all points are collinear");

    Point3 plane_n = normalized(cross(pts[i1] - pts[i0], pts[i2] - pts[i0]));
    int i3 = -1;
    best = 0.0;
    for (int i = 0; i < n; ++i) {
        double d = std::abs(dot(plane_n, pts[i] - pts[i0]));
        if (d > best) {
            best = d;
            i3 = i;
        }
    }
    if (best <= kDistinctTol) throw DegenerateInput("all points are coplanar");

    const Point3 interior = (pts[i0] + pts[i1] + pts[i2] + pts[i3]) * 0.25;
    std::vector<Face> faces;
    faces.push_back(make_face(pts, i0, i1, i2, interior));
    faces.push_back(make_face(pts, i0, i1, i3, interior));
    faces.push_back(make_face(pts, i0, i2, i3, interior));
    faces.push_back(make_face(pts, i1, i2, i3, interior));

    std::vector<char> visible;
    for (int p = 0; p < n; ++p) {
        if (p == i0 || p == i1 || p == i2 || p == i3) continue;

        visible.assign(faces.size(), 0);
        bool any = false;
        for (std::size_t f = 0; f < faces.size(); ++f) {
            if (!faces[f].alive) continue;
            if (dot(faces[f].n, pts[p]) - faces[f].d > kVisibleTol) {
                visible[f] = 1;
                any = true;
            }
        }
        if (!any) continue;

        // Horizon: directed edges of visible faces whose twin sits on a
        // face that stays.
        std::vector<std::array<int, 2>> horizon;
        for (std::size_t f = 0; f < faces.size(); ++f) {
            if (!visible[f]) continue;
            for (int e = 0; e < 3; ++e) {
                int a = faces[f].v[e];
                int b = faces[f].v[(e + 1) % 3];
                bool twin_visible = false;
                for (std::size_t g = 0; g < faces.size(); ++g) {
                    if (g == f || !faces[g].alive) continue;
                    const auto& w = faces[g].v;
                    bool has_twin = (w[0] == b && w[1] == a) || (w[1] == b && w[2] == a) ||
                                    (w[2] == b && w[0] == a);
                    if (has_twin) {
                        twin_visible = visible[g] != 0;
                        break;
                    }
                }
                if (!twin_visible) horizon.push_back({a, b});
            }
        }
        for (std::size_t f = 0; f < faces.size(); ++f) {
            if (visible[f]) faces[f].alive = false;
        }
        for (const auto& [a, b] : horizon) {
            Face nf;
            nf.v = {a, b, p};
            nf.n = normalized(cross(pts[b] - pts[a], pts[p] - pts[a]));
            nf.d = dot(nf.n, pts[a]);
            faces.push_back(nf);
        }
        std::erase_if(faces, [](const Face& f) { return !f.alive; });
    }
    return faces;
}

// Strictly convex polygon (counter-clockwise about `normal`) from a set of
// coplanar vertices; collinear and interior points are dropped.
std::vector<int> planar_polygon(std::span<const Point3> pts, std::vector<int> ids, const Point3& normal) {
    Point3 seed = std::abs(normal.x) < 0.9 ? Point3{1, 0, 0} : Point3{0, 1, 0};
    Point3 u = normalized(cross(normal, seed));
    Point3 w = cross(normal, u);
    struct P2 {
        double x, y;
        int id;
    };
    std::vector<P2> q;
    q.reserve(ids.size());
    for (int id : ids) q.push_back({dot(pts[id], u), dot(pts[id], w), id});
    std::sort(q.begin(), q.end(), [](const P2& a, const P2& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
    auto turn = [](const P2& o, const P2& a, const P2& b) {
        return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
    };
    std::vector<P2> h(2 * q.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < q.size(); ++i) {
        while (k >= 2 && turn(h[k - 2], h[k - 1], q[i]) <= kPlaneTol) --k;
        h[k++] = q[i];
    }
    for (std::size_t i = q.size() - 1, lo = k + 1; i-- > 0;) {
        while (k >= lo && turn(h[k - 2], h[k - 1], q[i]) <= kPlaneTol) --k;
        h[k++] = q[i];
    }
    h.resize(k - 1);
    std::vector<int> out;
    out.reserve(h.size());
    for (const auto& p : h) out.push_back(p.id);
    return out;
}

std::vector<std::vector<int>> merged_polygons(std::span<const Point3> pts, const std::vector<Face>& faces) {
    std::vector<int> cluster(faces.size(), -1);
    std::vector<std::vector<int>> polys;
    for (std::size_t f = 0; f < faces.size(); ++f) {
        if (cluster[f] >= 0) continue;
        cluster[f] = static_cast<int>(polys.size());
        std::vector<int> ids(faces[f].v.begin(), faces[f].v.end());
        for (std::size_t g = f + 1; g < faces.size(); ++g) {
            if (cluster[g] >= 0) continue;
            bool same_plane = dot(faces[f].n, faces[g].n) > 1.0 - kPlaneTol;
            for (int v : faces[g].v) {
                same_plane = same_plane && std::abs(dot(faces[f].n, pts[v]) - faces[f].d) <= kPlaneTol;
            }
            if (!same_plane) continue;
            cluster[g] = cluster[f];
            ids.insert(ids.end(), faces[g].v.begin(), faces[g].v.end());
        }
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        std::vector<int> poly = planar_polygon(pts, ids, faces[f].n);
        auto lowest = std::min_element(poly.begin(), poly.end());
        std::rotate(poly.begin(), lowest, poly.end());
        polys.push_back(std::move(poly));
    }
    return polys;
}

}  // namespace

std::vector<std::vector<int>> hull_polygons(std::span<const Point3> points) {
    return merged_polygons(points, incremental_hull(points));
}

Realization convex_hull(std::span<const Point3> points) {
    Realization r;
    r.points.assign(points.begin(), points.end());
    for (const auto& poly : hull_polygons(points)) {
        for (std::size_t i = 1; i + 1 < poly.size(); ++i) {
            r.facets.push_back({poly[0], poly[i], poly[i + 1]});
        }
    }
    return r;
}

}  // namespace equifacet
