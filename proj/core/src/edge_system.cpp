#include "equifacet/realize.hpp"

#include "rng.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace equifacet {

namespace {

struct System {
    const PolytopeGraph& g;
    const EdgeColoring& c;
    const EdgeSystemOptions& opts;
    int k;
    int n_unknowns;
    int n_residuals;

    int length_index(int edge) const {
        if (opts.equal_lengths) return 3 * k;
        return 3 * k + (c.color(edge) == Color::red ? 0 : 1);
    }

    void eval(const Eigen::VectorXd& x, Eigen::VectorXd& f, Eigen::MatrixXd* jac) const {
        f.setZero(n_residuals);
        if (jac) jac->setZero(n_residuals, n_unknowns);
        int row = 0;
        for (int i = 0; i < k; ++i, ++row) {
            Eigen::Vector3d p = x.segment<3>(3 * i);
            f[row] = p.squaredNorm() - 1.0;
            if (jac) jac->block<1, 3>(row, 3 * i) = 2.0 * p.transpose();
        }
        for (int e = 0; e < g.edge_count(); ++e, ++row) {
            auto [u, v] = g.edges()[e];
            Eigen::Vector3d d = x.segment<3>(3 * u) - x.segment<3>(3 * v);
            int li = length_index(e);
            f[row] = d.squaredNorm() - x[li] * x[li];
            if (jac) {
                jac->block<1, 3>(row, 3 * u) = 2.0 * d.transpose();
                jac->block<1, 3>(row, 3 * v) = -2.0 * d.transpose();
                (*jac)(row, li) = -2.0 * x[li];
            }
        }
        for (const auto& [u, v] : opts.antipodal) {
            for (int t = 0; t < 3; ++t, ++row) {
                f[row] = x[3 * u + t] + x[3 * v + t];
                if (jac) {
                    (*jac)(row, 3 * u + t) = 1.0;
                    (*jac)(row, 3 * v + t) = 1.0;
                }
            }
        }
    }
};

bool levenberg_marquardt(const System& s, Eigen::VectorXd& x) {
    Eigen::VectorXd f;
    Eigen::VectorXd trial_f;
    Eigen::MatrixXd jac;
    s.eval(x, f, &jac);
    double cost = f.squaredNorm();
    double lambda = 1e-3;
    for (int it = 0; it < s.opts.max_iterations; ++it) {
        if (f.cwiseAbs().maxCoeff() <= 1e-3 * s.opts.tol) break;
        Eigen::MatrixXd jtj = jac.transpose() * jac;
        Eigen::VectorXd grad = jac.transpose() * f;
        bool improved = false;
        for (int tries = 0; tries < 12 && !improved; ++tries) {
            Eigen::MatrixXd m = jtj;
            m.diagonal().array() += lambda;
            Eigen::VectorXd step = m.ldlt().solve(-grad);
            Eigen::VectorXd trial = x + step;
            s.eval(trial, trial_f, nullptr);
            double trial_cost = trial_f.squaredNorm();
            if (trial_cost < cost) {
                x = trial;
                lambda = std::max(lambda / 3.0, 1e-12);
                improved = true;
            } else {
                lambda *= 4.0;
            }
        }
        if (!improved) break;
        s.eval(x, f, &jac);
        cost = f.squaredNorm();
    }
    return f.cwiseAbs().maxCoeff() <= s.opts.tol;
}

}  // namespace

std::vector<EdgeSystemSolution> solve_edge_system(const PolytopeGraph& g, const EdgeColoring& c,
                                                  const EdgeSystemOptions& opts) {
    const int k = g.k();
    System sys{g, c, opts, k, 3 * k + 2, k + g.edge_count() + 3 * static_cast<int>(opts.antipodal.size())};
    std::vector<EdgeSystemSolution> out;

    for (int start = 0; start < opts.starts; ++start) {
        auto rng = detail::stream(opts.seed, static_cast<std::uint64_t>(start));
        Eigen::VectorXd x(sys.n_unknowns);
        for (int i = 0; i < k; ++i) {
            Point3 p = normalized(Point3{detail::gaussian(rng), detail::gaussian(rng), detail::gaussian(rng)});
            x.segment<3>(3 * i) << p.x, p.y, p.z;
        }
        x[3 * k] = 0.3 + 1.7 * detail::uniform01(rng);
        x[3 * k + 1] = 0.3 + 1.7 * detail::uniform01(rng);
        if (!levenberg_marquardt(sys, x)) continue;

        EdgeSystemSolution sol;
        sol.realization.facets = g.facets();
        for (int i = 0; i < k; ++i) {
            sol.realization.points.push_back(normalized(Point3{x[3 * i], x[3 * i + 1], x[3 * i + 2]}));
        }
        sol.a = std::abs(x[3 * k]);
        sol.b = opts.equal_lengths ? sol.a : std::abs(x[3 * k + 1]);
        if (sol.a < 1e-6 || sol.b < 1e-6 || !all_distinct(sol.realization.points, 1e-6)) continue;

        double res = 0.0;
        for (int e = 0; e < g.edge_count(); ++e) {
            auto [u, v] = g.edges()[e];
            double len = c.color(e) == Color::red ? sol.a : sol.b;
            res = std::max(res, std::abs(distance(sol.realization.points[u], sol.realization.points[v]) - len));
        }
        sol.residual = res;
        auto conv = check_convex_position(sol.realization, 1e-7);
        sol.weakly_convex = conv.weakly_convex;
        sol.strictly_convex = conv.strictly_convex;
        if (!sol.weakly_convex) continue;
        sol.area = surface_area(sol.realization);
        sol.hull_faces = static_cast<int>(hull_polygons(sol.realization.points).size());

        bool duplicate = std::any_of(out.begin(), out.end(), [&](const EdgeSystemSolution& o) {
            return std::abs(o.area - sol.area) < 1e-7 && std::abs(o.a - sol.a) < 1e-7 && std::abs(o.b - sol.b) < 1e-7 &&
                   o.strictly_convex == sol.strictly_convex;
        });
        if (!duplicate) out.push_back(std::move(sol));
    }
    std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.area > r.area; });
    return out;
}

Class14iiRefutation refute_class14ii(const PolytopeGraph& g, const EdgeColoring& c, std::uint64_t seed) {
    EdgeSystemOptions opts;
    opts.seed = seed;
    opts.antipodal = deduce_antipodal_pairs(g, c);
    Class14iiRefutation out;
    out.starts = opts.starts;
    auto sols = solve_edge_system(g, c, opts);
    out.solutions = static_cast<int>(sols.size());
    out.min_hull_faces = out.max_hull_faces = 0;
    for (std::size_t i = 0; i < sols.size(); ++i) {
        if (i == 0) out.min_hull_faces = out.max_hull_faces = sols[i].hull_faces;
        out.min_hull_faces = std::min(out.min_hull_faces, sols[i].hull_faces);
        out.max_hull_faces = std::max(out.max_hull_faces, sols[i].hull_faces);
    }
    out.refuted = std::all_of(sols.begin(), sols.end(),
                              [&g](const EdgeSystemSolution& s) { return s.hull_faces < 2 * g.k() - 4; });
    return out;
}

}  // namespace equifacet
