#include "report.hpp"

#include <equifacet/errors.hpp>

#include <cstdio>
#include <fstream>

namespace equifacet::cli {

std::string digest(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : bytes) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
    return buf;
}

ordered_json to_json(const Point3& p) { return ordered_json::array({p.x, p.y, p.z}); }

ordered_json to_json(const Realization& r) {
    ordered_json j;
    j["points"] = ordered_json::array();
    for (const auto& p : r.points) j["points"].push_back(to_json(p));
    j["facets"] = ordered_json::array();
    for (const auto& f : r.facets) j["facets"].push_back({f[0], f[1], f[2]});
    j["area"] = surface_area(r);
    return j;
}

ordered_json coloring_json(const PolytopeGraph& g, const EdgeColoring& c) {
    ordered_json j = ordered_json::array();
    for (const auto& e : red_edges(g, c)) j.push_back({e[0], e[1]});
    return j;
}

ordered_json verdict_json(const PolytopeGraph& g, const EliminationVerdict& v) {
    ordered_json j;
    if (v.eliminated) {
        j["status"] = "eliminated";
        j["rule"] = std::string(rule_name(*v.rule));
        ordered_json w = ordered_json::array();
        for (int x : v.witnesses) w.push_back(g.vertex_name(x));
        j["witnesses"] = w;
    } else {
        j["status"] = v.forced_equilateral() ? "forced-equilateral" : "survives";
    }
    ordered_json pairs = ordered_json::array();
    for (const auto& [a, b] : v.antipodal_pairs) pairs.push_back({g.vertex_name(a), g.vertex_name(b)});
    j["antipodal_pairs"] = pairs;
    if (v.forcing != Forcing::none) {
        j["equal_lengths_forced_by"] = v.forcing == Forcing::defect_b ? "DefectB" : "DefectC";
        j["forcing_pair"] = {g.vertex_name(v.forcing_pair[0]), g.vertex_name(v.forcing_pair[1])};
    }
    return j;
}

ordered_json class_result_json(const PolytopeGraph* g, const ClassResult& r) {
    ordered_json j;
    j["class"] = r.class_label;
    j["colorings"] = r.colorings;
    j["automorphisms"] = r.automorphisms;
    ordered_json by = ordered_json::object();
    for (const auto& [rule, n] : r.eliminated_by) by[std::string(rule_name(rule))] = n;
    j["eliminated_by"] = by;
    j["survivors"] = r.survivors;
    j["survivor_orbits"] = r.survivor_orbits;
    j["forced_equilateral"] = r.forced_equilateral;
    j["forced_equilateral_orbits"] = r.forced_equilateral_orbits;
    if (g) {
        ordered_json reps = ordered_json::array();
        for (const auto& c : r.survivor_representatives) reps.push_back(coloring_json(*g, c));
        j["survivor_orbit_red_edges"] = reps;
    }
    if (!r.outcomes.empty()) {
        ordered_json outs = ordered_json::array();
        for (const auto& o : r.outcomes) {
            ordered_json oj;
            oj["variant"] = o.variant;
            oj["disposition"] = std::string(disposition_name(o.disposition));
            oj["method"] = o.method;
            oj["detail"] = o.detail;
            if (o.disposition == Disposition::realized) {
                oj["area"] = o.area;
                oj["a"] = o.a;
                oj["b"] = o.b;
                oj["degenerate"] = o.degenerate;
            }
            if (g) {
                ordered_json cs = ordered_json::array();
                for (const auto& c : o.colorings) cs.push_back(coloring_json(*g, c));
                oj["orbit_red_edges"] = cs;
            }
            outs.push_back(oj);
        }
        j["outcomes"] = outs;
    }
    return j;
}

ordered_json verify_json(const VerifyReport& rep, const std::vector<CatalogEntry>& catalog) {
    ordered_json j;
    j["k"] = rep.k;
    j["strict"] = rep.strict;
    ordered_json classes = ordered_json::array();
    for (const auto& c : rep.classes) {
        const PolytopeGraph* g = nullptr;
        for (const auto& e : catalog) {
            if (e.graph.label() == c.class_label) g = &e.graph;
        }
        classes.push_back(class_result_json(g, c));
    }
    j["classes"] = classes;
    j["max_area"] = rep.max_area;
    j["winner_class"] = rep.winner_class;
    j["winner_variant"] = rep.winner_variant;
    j["ties"] = rep.ties;
    j["strict_max_area"] = rep.strict_max_area;
    j["strict_winner_class"] = rep.strict_winner_class;
    j["strict_winner_variant"] = rep.strict_winner_variant;
    j["expected_max"] = rep.expected_max;
    j["expected_winner"] = rep.expected_winner;
    j["checks"] = {{"max_matches", rep.max_matches},
                   {"winner_matches", rep.winner_matches},
                   {"witness_matches", rep.witness_matches},
                   {"all_resolved", rep.all_resolved}};
    j["passed"] = rep.passed;
    j["best_realization"] = to_json(rep.witness);
    return j;
}

std::string render_report(const ordered_json& body, double wall_seconds) {
    ordered_json doc;
    doc["body"] = body;
    doc["meta"] = {{"wall_time_s", wall_seconds}};
    return doc.dump(2) + "\n";
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << text;
    if (!out) throw Error("failed writing " + path);
}

}  // namespace equifacet::cli
