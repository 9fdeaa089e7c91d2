#pragma once

#include "equifacet/coloring.hpp"
#include "equifacet/geom.hpp"
#include "equifacet/graph.hpp"
#include "equifacet/polynomial.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace equifacet {

// One-parameter family of configurations on the sphere; `constraint` has the
// equifacetal parameter value among its roots in (lo, hi).
struct ParametricFamily {
    std::string class_label;
    std::function<Realization(double)> builder;
    Polynomial constraint;
    double lo = -1.0;
    double hi = 1.0;
};

ParametricFamily class10_family();
ParametricFamily class14iii_family();

// A class built at its solved parameter. Points are indexed by the catalog
// vertex order of `class_label`; facets are the catalog facets.
struct ClassRealization {
    std::string class_label;
    std::string variant;
    double h = 0.0;
    double a = 0.0;  // base (red) length
    double b = 0.0;  // leg (blue) length
    Realization realization;
    double area = 0.0;
    bool degenerate = false;  // some adjacent facets are coplanar
    int hull_faces = 0;       // planar faces of the convex hull
};

ClassRealization realize_class10();
ClassRealization realize_class14i();
ClassRealization realize_class14iii();
// ±e3 over a regular n-gon, relabeled onto the catalog graph `g`.
ClassRealization realize_bipyramid(const PolytopeGraph& g, int n);

// Explicit coordinates of the eight-vertex maximizer.
std::vector<Point3> eight_vertex_maximizer();

struct Class12Refutation {
    std::vector<double> candidate_roots;  // roots of the constraint in [-1, 1]
    double h = 0.0;                       // the feasible one
    double a = 0.0;
    double b = 0.0;
    Realization forced;                   // catalog labels and facets
    Realization hull;
    bool hull_matches_class_facets = false;
    bool class_facets_convex = false;     // catalog facets support the point set
    int hull_faces = 0;
    bool refuted = false;
};
Class12Refutation refute_class12();

struct Class8Root {
    int sign_pattern = 0;
    double h = 0.0;
    double residual = 0.0;
    double min_distance = 0.0;
    bool coplanar_abef = false;
    bool coplanar_cdgh = false;
};
struct Class8Refutation {
    int grid_samples = 0;
    int sign_patterns = 0;
    double min_residual_away_from_roots = 0.0;
    std::vector<Class8Root> roots;  // refined zeros of the forced residual
    bool refuted = false;
};
// Grid scan of the forced Class 8 configuration: every zero of the distance
// residual either merges two vertices or makes {A,B,E,F} and {C,D,G,H}
// coplanar.
Class8Refutation refute_class8(int samples = 10000);
// Residual of the forced Class 8 edge system at height h for one of the 16
// sign patterns, or a negative value where the family is undefined.
double class8_residual(double h, int sign_pattern);

struct SnubRefutation {
    double q = 0.0;
    double residual = 0.0;  // |2q^3 + 11q^2 + 4q - 1|
    double r = 0.0;
    double s = 0.0;
    double t = 0.0;
    double radius_sq_a = 0.0;  // r^2 + t^2
    double radius_sq_b = 0.0;  // 1 + s^2
    std::vector<double> listed_norms;
    int distinct_norms = 0;
    bool corrected_is_deltahedron = false;  // sign-corrected list, all 18 edges equal
    bool refuted = false;
};
SnubRefutation refute_snub_disphenoid();

// Equilateral pentagonal bipyramid: equator circumradius vs apex offset.
struct EquilateralBipyramidCheck {
    double equator_circumradius = 0.0;
    double apex_height = 0.0;
    double center_offset = 0.0;  // mismatch between the two sphere centres
    bool inscribable = false;
};
EquilateralBipyramidCheck check_equilateral_pentagonal_bipyramid();

// ---- generic edge-length system ----

struct EdgeSystemOptions {
    int starts = 48;
    std::uint64_t seed = 1;
    double tol = 1e-10;
    int max_iterations = 400;
    bool equal_lengths = false;
    std::vector<VertexPair> antipodal;
};

struct EdgeSystemSolution {
    Realization realization;  // catalog facets
    double a = 0.0;
    double b = 0.0;
    double residual = 0.0;
    double area = 0.0;
    bool weakly_convex = false;
    bool strictly_convex = false;
    int hull_faces = 0;
};

// Solves |p_i| = 1 and |p_u - p_v| = a (red) or b (blue) from seeded random
// starts with damped Gauss-Newton. Returns distinct converged solutions whose
// catalog facets bound the point set, largest area first.
std::vector<EdgeSystemSolution> solve_edge_system(const PolytopeGraph& g, const EdgeColoring& c,
                                                  const EdgeSystemOptions& opts = {});

struct Class14iiRefutation {
    int starts = 0;
    int solutions = 0;
    int min_hull_faces = 0;
    int max_hull_faces = 0;
    bool refuted = false;
};
Class14iiRefutation refute_class14ii(const PolytopeGraph& g, const EdgeColoring& c, std::uint64_t seed = 1);

}  // namespace equifacet
