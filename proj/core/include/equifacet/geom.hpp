#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace equifacet {

inline constexpr double kSphereTol = 1e-12;
inline constexpr double kShapeTol = 1e-8;
inline constexpr double kDistinctTol = 1e-9;

struct Point3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Point3 operator+(const Point3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    constexpr Point3 operator-(const Point3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    constexpr Point3 operator-() const { return {-x, -y, -z}; }
    constexpr Point3 operator*(double s) const { return {x * s, y * s, z * s}; }
    constexpr Point3 operator/(double s) const { return {x / s, y / s, z / s}; }
    Point3& operator+=(const Point3& o) {
        x += o.x;
        y += o.y;
        z += o.z;
        return *this;
    }
    constexpr bool operator==(const Point3&) const = default;
};

constexpr Point3 operator*(double s, const Point3& p) { return p * s; }
constexpr double dot(const Point3& a, const Point3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
constexpr Point3 cross(const Point3& a, const Point3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Point3& p) { return std::sqrt(dot(p, p)); }
inline double distance(const Point3& a, const Point3& b) { return norm(a - b); }
inline Point3 normalized(const Point3& p) { return p / norm(p); }

using Facet = std::array<int, 3>;

// K labeled points plus a triangulated boundary. Facets index into `points`.
struct Realization {
    std::vector<Point3> points;
    std::vector<Facet> facets;
};

enum class ShapeKind { equilateral, isosceles, scalene };

struct FacetShape {
    ShapeKind kind = ShapeKind::scalene;
    std::array<double, 3> lengths{};  // ascending

    // For isosceles facets: the repeated length and the odd one out.
    double leg() const;
    double base() const;
};

struct FacetClassification {
    std::vector<FacetShape> shapes;
    bool congruent = false;
    bool spherical = false;
    // Membership in the equifacetal class: congruent, all isosceles or all
    // equilateral, every vertex on the unit sphere.
    bool equifacetal = false;
    double max_triple_spread = 0.0;
};

double triangle_area(const Point3& a, const Point3& b, const Point3& c);

// Throws DegenerateInput for fewer than 4 points or a flat point set.
Realization convex_hull(std::span<const Point3> points);

// Hull faces as planar polygons (vertex cycles, counter-clockwise seen from
// outside). A cube yields 6 quadrilaterals.
std::vector<std::vector<int>> hull_polygons(std::span<const Point3> points);

double surface_area(const Realization& r);
FacetClassification classify_facets(const Realization& r);

// Mean squared deviation of each facet's sorted edge-length triple from the
// mean triple. Zero exactly when all facets are congruent.
double congruence_defect(const Realization& r);

double bipyramid_max_area(int n);

struct AsymptoticBounds {
    double lower = 0.0;
    double upper = 0.0;
};
AsymptoticBounds asymptotic_bounds(int k);

bool on_unit_sphere(const Point3& p, double tol = kSphereTol);
bool all_on_unit_sphere(std::span<const Point3> pts, double tol = kSphereTol);
bool all_distinct(std::span<const Point3> pts, double tol = kDistinctTol);

struct ConvexityReport {
    bool weakly_convex = false;       // every facet plane supports the point set
    bool strictly_convex = false;     // and no other point lies on it
    int coplanar_adjacent_pairs = 0;  // adjacent facets sharing a plane
    int edges_not_in_two_facets = 0;
};
ConvexityReport check_convex_position(const Realization& r, double tol = 1e-9);

// A realization is degenerate when two adjacent facets are coplanar, so the
// drawn edge between them is not an edge of the polytope.
bool is_degenerate(const Realization& r, double tol = 1e-9);

std::vector<std::array<int, 2>> facet_edges(std::span<const Facet> facets);

// Rigidly compares two labeled-free point sets by their sorted pairwise
// distance spectra.
bool same_distance_spectrum(std::span<const Point3> a, std::span<const Point3> b, double tol = 1e-9);

Realization bipyramid(int n);
Realization regular_tetrahedron();
Realization regular_octahedron();
Realization regular_icosahedron();

}  // namespace equifacet
