#include "equifacet/verify.hpp"

#include "equifacet/errors.hpp"
#include "equifacet/realize.hpp"
#include "equifacet/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <optional>
#include <sstream>

namespace equifacet {

std::string_view disposition_name(Disposition d) {
    switch (d) {
        case Disposition::realized: return "realized";
        case Disposition::refuted: return "refuted";
        case Disposition::cited_non_inscribable: return "cited-non-inscribable";
        case Disposition::unresolved: return "unresolved";
    }
    return "unknown";
}

double expected_maximum(int k) {
    if (k == 7) return 1.25 * std::sqrt(50.0 - 6.0 * std::sqrt(5.0));
    if (k == 8) return 8.0;
    throw InvalidArgument("expected maximum is known for k = 7 and k = 8 only");
}

namespace {

struct Pruned {
    ClassResult result;
    std::vector<std::vector<EdgeColoring>> survivor_orbits;
    std::vector<std::vector<EdgeColoring>> forced_orbits;
};

Pruned prune_class(const PolytopeGraph& g) {
    Pruned out;
    auto autos = automorphisms(g);
    std::vector<EdgeColoring> survivors;
    std::vector<EdgeColoring> forced;
    for (const auto& [c, v] : prune(g)) {
        ++out.result.colorings;
        if (v.eliminated) {
            ++out.result.eliminated_by[*v.rule];
        } else if (v.forced_equilateral()) {
            forced.push_back(c);
        } else {
            survivors.push_back(c);
        }
    }
    out.survivor_orbits = coloring_orbits(g, autos, survivors);
    out.forced_orbits = coloring_orbits(g, autos, forced);
    ClassResult& r = out.result;
    r.class_label = g.label();
    r.automorphisms = static_cast<int>(autos.size());
    r.survivors = static_cast<int>(survivors.size());
    r.survivor_orbits = static_cast<int>(out.survivor_orbits.size());
    r.forced_equilateral = static_cast<int>(forced.size());
    r.forced_equilateral_orbits = static_cast<int>(out.forced_orbits.size());
    for (const auto& o : out.survivor_orbits) r.survivor_representatives.push_back(o.front());
    return out;
}

ClassOutcome from_realization(const ClassRealization& cr, std::string method) {
    ClassOutcome o;
    o.variant = cr.variant;
    o.disposition = Disposition::realized;
    o.method = std::move(method);
    o.realization = cr.realization;
    o.area = cr.area;
    o.a = cr.a;
    o.b = cr.b;
    o.degenerate = cr.degenerate;
    std::ostringstream d;
    d.precision(12);
    d << "h=" << cr.h << " a=" << cr.a << " b=" << cr.b << " hull_faces=" << cr.hull_faces;
    o.detail = d.str();
    return o;
}

std::string fmt(double x) {
    std::ostringstream s;
    s.precision(12);
    s << x;
    return s.str();
}

// Variant handlers keyed by (class label, reference name). An empty
// reference name covers every surviving orbit of the class.
using Handler = std::function<ClassOutcome(const CatalogEntry&, const std::vector<EdgeColoring>&, std::uint64_t)>;

ClassOutcome class1_probe(const CatalogEntry& e, const std::vector<EdgeColoring>& reps, std::uint64_t seed) {
    ClassOutcome o;
    o.variant = "all";
    o.disposition = Disposition::cited_non_inscribable;
    o.method = "triakis-tetrahedron type is not inscribable (cited)";
    int sols = 0;
    int strict = 0;
    double best = 0.0;
    for (const auto& c : reps) {
        EdgeSystemOptions opts;
        opts.seed = seed;
        for (const auto& s : solve_edge_system(e.graph, c, opts)) {
            ++sols;
            strict += s.strictly_convex ? 1 : 0;
            best = std::max(best, s.area);
        }
    }
    o.detail = "probe: " + std::to_string(sols) + " converged edge-system solutions, " + std::to_string(strict) +
               " strictly convex, largest area " + fmt(best);
    return o;
}

// Numerical realization of orbits that have no closed-form builder: the
// largest converged solution of the edge-length system.
ClassOutcome edge_system_outcome(const CatalogEntry& e, const std::vector<EdgeColoring>& reps, std::uint64_t seed) {
    ClassOutcome o;
    o.variant = "edge-system";
    o.method = "largest converged solution of the edge-length system";
    std::optional<EdgeSystemSolution> best;
    int sols = 0;
    for (const auto& c : reps) {
        EdgeSystemOptions opts;
        opts.seed = seed;
        auto found = solve_edge_system(e.graph, c, opts);
        sols += static_cast<int>(found.size());
        if (!found.empty() && (!best || found.front().area > best->area)) best = found.front();
    }
    if (!best) {
        o.detail = "no converged solution";
        return o;
    }
    o.disposition = Disposition::realized;
    o.realization = best->realization;
    o.area = best->area;
    o.a = best->a;
    o.b = best->b;
    o.degenerate = !best->strictly_convex || is_degenerate(best->realization);
    o.detail = std::to_string(sols) + " solutions; a=" + fmt(best->a) + " b=" + fmt(best->b) +
               " hull_faces=" + std::to_string(best->hull_faces) + " residual=" + fmt(best->residual);
    return o;
}

ClassOutcome class8(const CatalogEntry&, const std::vector<EdgeColoring>&, std::uint64_t) {
    auto r = refute_class8();
    ClassOutcome o;
    o.variant = "figure";
    o.disposition = r.refuted ? Disposition::refuted : Disposition::unresolved;
    o.method = "forced-coordinate residual scan (numerical)";
    int collapsed = 0;
    int coplanar = 0;
    for (const auto& root : r.roots) {
        if (root.min_distance < 1e-6) {
            ++collapsed;
        } else if (root.coplanar_abef && root.coplanar_cdgh) {
            ++coplanar;
        }
    }
    o.detail = std::to_string(r.grid_samples) + " samples x " + std::to_string(r.sign_patterns) + " sign patterns; " +
               std::to_string(r.roots.size()) + " zeros: " + std::to_string(collapsed) + " merge vertices, " +
               std::to_string(coplanar) + " make ABEF and CDGH coplanar; min residual elsewhere " +
               fmt(r.min_residual_away_from_roots);
    return o;
}

ClassOutcome class12(const CatalogEntry&, const std::vector<EdgeColoring>&, std::uint64_t) {
    auto r = refute_class12();
    ClassOutcome o;
    o.variant = "figure";
    o.disposition = r.refuted ? Disposition::refuted : Disposition::unresolved;
    o.method = "forced coordinates vs hull facets";
    o.a = r.a;
    o.b = r.b;
    o.detail = "h=" + fmt(r.h) + " a^2+b^2=" + fmt(r.a * r.a + r.b * r.b) + " hull_faces=" +
               std::to_string(r.hull_faces) + " hull matches class facets: " +
               (r.hull_matches_class_facets ? "yes" : "no");
    return o;
}

ClassOutcome class14ii(const CatalogEntry& e, const std::vector<EdgeColoring>& reps, std::uint64_t seed) {
    auto r = refute_class14ii(e.graph, reps.front(), seed);
    ClassOutcome o;
    o.variant = "ii";
    o.disposition = r.refuted ? Disposition::refuted : Disposition::unresolved;
    o.method = "forced edge system with antipodal pairs; hull collapses";
    o.detail = std::to_string(r.solutions) + " solutions from " + std::to_string(r.starts) +
               " starts, hull faces in [" + std::to_string(r.min_hull_faces) + ", " +
               std::to_string(r.max_hull_faces) + "] (< 12)";
    return o;
}

std::map<std::pair<std::string, std::string>, Handler> handlers(int k) {
    std::map<std::pair<std::string, std::string>, Handler> h;
    if (k == 7) {
        h[{"K7-C5", ""}] = [](const CatalogEntry& e, const std::vector<EdgeColoring>&, std::uint64_t) {
            return from_realization(realize_bipyramid(e.graph, 5), "bipyramid maximum over a regular pentagon");
        };
        return h;
    }
    h[{"K8-C1", ""}] = class1_probe;
    h[{"K8-C8", "figure"}] = class8;
    h[{"K8-C10", "figure"}] = [](const CatalogEntry&, const std::vector<EdgeColoring>&, std::uint64_t) {
        return from_realization(realize_class10(), "latitude-plane family, 2(1-h) = 1+3h^2");
    };
    h[{"K8-C12", "figure"}] = class12;
    h[{"K8-C13", "bipyramid"}] = [](const CatalogEntry& e, const std::vector<EdgeColoring>&, std::uint64_t) {
        return from_realization(realize_bipyramid(e.graph, 6), "bipyramid maximum over a regular hexagon");
    };
    h[{"K8-C13", ""}] = edge_system_outcome;
    h[{"K8-C14", "i"}] = [](const CatalogEntry&, const std::vector<EdgeColoring>&, std::uint64_t) {
        return from_realization(realize_class14i(), "explicit coordinates, a=1, b=sqrt2");
    };
    h[{"K8-C14", "ii"}] = class14ii;
    h[{"K8-C14", "iii"}] = [](const CatalogEntry&, const std::vector<EdgeColoring>&, std::uint64_t) {
        return from_realization(realize_class14iii(), "great-circle family, (1-h^2)(1+3h^2) = 1+h^2");
    };
    return h;
}

ClassOutcome equilateral_outcome(int k) {
    ClassOutcome o;
    o.variant = "equilateral";
    if (k == 8) {
        auto s = refute_snub_disphenoid();
        o.disposition = s.refuted ? Disposition::refuted : Disposition::unresolved;
        o.method = "only 8-vertex convex deltahedron is the snub disphenoid; not inscribable";
        o.detail = "q=" + fmt(s.q) + " r^2+t^2=" + fmt(s.radius_sq_a) + " 1+s^2=" + fmt(s.radius_sq_b);
    } else {
        auto c = check_equilateral_pentagonal_bipyramid();
        o.disposition = c.inscribable ? Disposition::unresolved : Disposition::refuted;
        o.method = "only 7-vertex convex deltahedron is the pentagonal bipyramid; not inscribable";
        o.detail = "equator circumradius " + fmt(c.equator_circumradius) + " vs apex height " + fmt(c.apex_height);
    }
    return o;
}

}  // namespace

ClassResult summarize_pruning(const PolytopeGraph& g) { return prune_class(g).result; }

VerifyReport verify_theorem(int k, const VerifyOptions& opts) {
    if (k != 7 && k != 8) throw InvalidArgument("verify supports k = 7 or k = 8, got " + std::to_string(k));
    const std::vector<CatalogEntry> catalog = opts.catalog ? *opts.catalog : builtin_catalog(k == 7 ? "k7" : "k8");
    const auto table = handlers(k);

    VerifyReport rep;
    rep.k = k;
    rep.strict = opts.strict;
    rep.expected_max = expected_maximum(k);
    rep.expected_winner = k == 7 ? "K7-C5" : "K8-C10";
    rep.all_resolved = true;

    for (const auto& entry : catalog) {
        if (entry.graph.k() != k) continue;
        Pruned p = prune_class(entry.graph);
        ClassResult& res = p.result;
        auto autos = automorphisms(entry.graph);

        std::vector<EdgeColoring> shared_reps;
        const Handler* shared = nullptr;
        for (const auto& orbit : p.survivor_orbits) {
            const EdgeColoring& rep_coloring = orbit.front();
            std::string variant;
            EdgeColoring key = canonical_form(entry.graph, autos, rep_coloring);
            for (const auto& ref : entry.references) {
                if (canonical_form(entry.graph, autos, entry.reference(ref.name)) == key) variant = ref.name;
            }
            if (auto it = table.find({res.class_label, variant}); !variant.empty() && it != table.end()) {
                ClassOutcome o = it->second(entry, {rep_coloring}, opts.seed);
                o.colorings = {rep_coloring};
                res.outcomes.push_back(std::move(o));
            } else if (auto all = table.find({res.class_label, ""}); all != table.end()) {
                shared = &all->second;
                shared_reps.push_back(rep_coloring);
            } else {
                ClassOutcome o;
                o.variant = variant.empty() ? "unmatched" : variant;
                o.method = "no geometric handler";
                o.colorings = {rep_coloring};
                res.outcomes.push_back(std::move(o));
            }
        }
        if (shared) {
            ClassOutcome o = (*shared)(entry, shared_reps, opts.seed);
            o.colorings = shared_reps;
            res.outcomes.push_back(std::move(o));
        }
        if (!p.forced_orbits.empty()) {
            ClassOutcome o = equilateral_outcome(k);
            for (const auto& orbit : p.forced_orbits) o.colorings.push_back(orbit.front());
            res.outcomes.push_back(std::move(o));
        }
        for (const auto& o : res.outcomes) {
            if (o.disposition == Disposition::unresolved) rep.all_resolved = false;
        }
        rep.classes.push_back(std::move(res));
    }

    const ClassOutcome* best = nullptr;
    const ClassOutcome* strict_best = nullptr;
    std::string best_class;
    for (const auto& c : rep.classes) {
        for (const auto& o : c.outcomes) {
            if (o.disposition != Disposition::realized) continue;
            if (!best || o.area > best->area + 1e-9) {
                best = &o;
                best_class = c.class_label;
            }
            if (!o.degenerate && (!strict_best || o.area > strict_best->area + 1e-9)) {
                strict_best = &o;
                rep.strict_winner_class = c.class_label;
            }
        }
    }
    if (strict_best) {
        rep.strict_max_area = strict_best->area;
        rep.strict_winner_variant = strict_best->variant;
    }
    if (best) {
        rep.max_area = best->area;
        rep.winner_class = best_class;
        rep.winner_variant = best->variant;
        rep.witness = *best->realization;
        for (const auto& c : rep.classes) {
            for (const auto& o : c.outcomes) {
                if (o.disposition == Disposition::realized && &o != best && std::abs(o.area - best->area) <= 1e-9) {
                    rep.ties.push_back(c.class_label + "(" + o.variant + ")");
                }
            }
        }
    }

    double reported = opts.strict ? rep.strict_max_area : rep.max_area;
    std::string winner = opts.strict ? rep.strict_winner_class : rep.winner_class;
    rep.max_matches = std::abs(reported - rep.expected_max) <= 1e-9;
    rep.winner_matches = winner == rep.expected_winner;
    if (best && !opts.strict) {
        std::vector<Point3> reference = k == 8 ? eight_vertex_maximizer() : bipyramid(5).points;
        rep.witness_matches = same_distance_spectrum(rep.witness.points, reference);
    }
    rep.passed = rep.max_matches && rep.winner_matches && rep.witness_matches && rep.all_resolved;
    return rep;
}

}  // namespace equifacet
