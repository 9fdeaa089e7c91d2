#include "cli.hpp"

#include "report.hpp"

#include <equifacet/catalog.hpp>
#include <equifacet/errors.hpp>
#include <equifacet/optimizer.hpp>
#include <equifacet/symmetry.hpp>
#include <equifacet/verify.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace equifacet::cli {

namespace {

struct Options {
    std::string catalog;
    std::string class_label;
    int k = 0;
    int restarts = 64;
    int iters = 0;
    std::uint64_t seed = 1;
    double penalty = 0.0;
    int threads = 1;
    bool strict = false;
    std::string out_path;
    std::string csv_path;
};

struct LoadedCatalog {
    std::string text;
    std::vector<CatalogEntry> entries;
};

// An existing file wins; otherwise the shipped catalogs answer to their
// file names, so `--catalog k8.catalog` works from any directory.
LoadedCatalog resolve_catalog(const std::string& arg) {
    namespace fs = std::filesystem;
    if (fs::exists(arg)) {
        std::ifstream in(arg, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        LoadedCatalog c{ss.str(), {}};
        c.entries = load_catalog(c.text, arg);
        return c;
    }
    std::string stem = fs::path(arg).filename().string();
    if (stem.ends_with(".catalog")) stem.resize(stem.size() - 8);
    if (arg.find('/') == std::string::npos && (stem == "k7" || stem == "k8" || stem == "warmup")) {
        LoadedCatalog c{std::string(builtin_catalog_text(stem)), {}};
        c.entries = load_catalog(c.text, stem + ".catalog");
        return c;
    }
    throw MalformedCatalog(arg + ": no such catalog file");
}

std::string fixed(double x, int digits = 6) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(digits) << x;
    return s.str();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void emit(const Options& o, const ordered_json& body, double wall) {
    if (!o.out_path.empty()) write_text_file(o.out_path, render_report(body, wall));
}

std::string bounds_csv_header() { return "K,value,lower_aK,upper_bK\n"; }

std::string bounds_csv_row(int k, double value) {
    auto b = asymptotic_bounds(k);
    std::ostringstream s;
    s << std::setprecision(17) << k << "," << value << "," << b.lower << "," << b.upper << "\n";
    return s.str();
}

int cmd_prune(const Options& o, std::ostream& out) {
    auto t0 = std::chrono::steady_clock::now();
    LoadedCatalog cat = resolve_catalog(o.catalog);
    bool matched = o.class_label.empty();

    ordered_json body;
    body["command"] = "prune";
    body["catalog"] = o.catalog;
    body["class_filter"] = o.class_label;
    body["inputs_digest"] = digest(cat.text);
    body["classes"] = ordered_json::array();

    out << std::left << std::setw(10) << "class" << std::right << std::setw(10) << "colorings" << std::setw(11)
        << "survivors" << std::setw(8) << "orbits" << std::setw(14) << "forced-equi" << "  eliminated by\n";
    for (const auto& entry : cat.entries) {
        const PolytopeGraph& g = entry.graph;
        if (!o.class_label.empty() && g.label() != o.class_label) continue;
        matched = true;
        ClassResult r = summarize_pruning(g);
        out << std::left << std::setw(10) << g.label() << std::right << std::setw(10) << r.colorings << std::setw(11)
            << r.survivors << std::setw(8) << r.survivor_orbits << std::setw(8) << r.forced_equilateral << " ("
            << r.forced_equilateral_orbits << ")  ";
        bool first = true;
        for (const auto& [rule, n] : r.eliminated_by) {
            out << (first ? "" : ", ") << rule_name(rule) << " " << n;
            first = false;
        }
        out << "\n";

        ordered_json cj = class_result_json(&g, r);
        cj["verdicts"] = ordered_json::array();
        for (const auto& [c, v] : prune(g)) {
            ordered_json vj;
            vj["red_edges"] = coloring_json(g, c);
            vj["verdict"] = verdict_json(g, v);
            cj["verdicts"].push_back(vj);
            if (!o.class_label.empty()) {
                out << "    red {";
                bool f = true;
                for (const auto& e : red_edges(g, c)) {
                    out << (f ? "" : " ") << g.vertex_name(e[0]) << g.vertex_name(e[1]);
                    f = false;
                }
                out << "}: ";
                if (v.eliminated) {
                    out << "eliminated by " << rule_name(*v.rule) << " at";
                    for (int w : v.witnesses) out << " " << g.vertex_name(w);
                } else {
                    out << (v.forced_equilateral() ? "forced equilateral" : "survives");
                }
                out << "\n";
            }
        }
        body["classes"].push_back(cj);
    }
    if (!matched) throw InvalidArgument("class '" + o.class_label + "' is not in " + o.catalog);
    emit(o, body, seconds_since(t0));
    return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
    auto t0 = std::chrono::steady_clock::now();
    VerifyOptions vo;
    vo.strict = o.strict;
    vo.seed = o.seed;
    LoadedCatalog cat;
    if (!o.catalog.empty()) {
        cat = resolve_catalog(o.catalog);
        vo.catalog = cat.entries;
    } else {
        cat.text = std::string(builtin_catalog_text(o.k == 7 ? "k7" : "k8"));
        cat.entries = load_catalog(cat.text);
    }
    VerifyReport rep = verify_theorem(o.k, vo);

    out << "k = " << rep.k << (rep.strict ? " (strict: degenerate realizations excluded)" : "") << "\n";
    for (const auto& c : rep.classes) {
        out << "  " << std::left << std::setw(8) << c.class_label << std::right << " colorings " << std::setw(3)
            << c.colorings << ", survivor orbits " << c.survivor_orbits << ", forced-equilateral orbits "
            << c.forced_equilateral_orbits << "\n";
        for (const auto& o2 : c.outcomes) {
            out << "      [" << o2.variant << "] " << disposition_name(o2.disposition);
            if (o2.disposition == Disposition::realized) {
                out << " area " << fixed(o2.area, 9) << (o2.degenerate ? " (degenerate)" : "");
            }
            out << ": " << o2.method << "\n        " << o2.detail << "\n";
        }
    }
    out << "maximum area " << fixed(rep.max_area, 9) << " in " << rep.winner_class << " (" << rep.winner_variant << ")";
    if (!rep.ties.empty()) {
        out << ", tied with";
        for (const auto& t : rep.ties) out << " " << t;
    }
    out << "\n";
    out << "strictly convex maximum " << fixed(rep.strict_max_area, 9) << " in " << rep.strict_winner_class << " ("
        << rep.strict_winner_variant << ")\n";
    out << "expected " << fixed(rep.expected_max, 9) << " in " << rep.expected_winner << ": "
        << (rep.passed ? "REPRODUCED" : "MISMATCH") << "\n";

    ordered_json body;
    body["command"] = "verify";
    body["inputs_digest"] = digest(cat.text);
    body["seed"] = o.seed;
    body["report"] = verify_json(rep, cat.entries);
    emit(o, body, seconds_since(t0));
    return rep.passed ? kOk : kMismatch;
}

int cmd_optimize(const Options& o, std::ostream& out) {
    auto t0 = std::chrono::steady_clock::now();
    OptimizerConfig cfg;
    cfg.k = o.k;
    cfg.restarts = o.restarts;
    cfg.iterations = o.iters;
    cfg.seed = o.seed;
    cfg.penalty_weight = o.penalty;
    cfg.threads = o.threads;
    OptimizerResult r = optimize_sphere(cfg);
    auto bounds = asymptotic_bounds(o.k);

    out << "k = " << o.k << ", restarts " << o.restarts << ", iterations "
        << (o.iters > 0 ? o.iters : default_iterations(o.k)) << ", seed " << o.seed << ", penalty " << o.penalty << "\n";
    out << "best area " << fixed(r.area, 9) << " (restart " << r.best_restart << "), congruence defect "
        << std::scientific << std::setprecision(3) << r.defect << std::defaultfloat << "\n";
    out << "asymptotic window [" << fixed(bounds.lower) << ", " << fixed(bounds.upper) << "]\n";
    for (std::size_t i = 0; i < r.best.points.size(); ++i) {
        const auto& p = r.best.points[i];
        out << "  " << std::setw(2) << i << "  " << std::setw(13) << fixed(p.x, 9) << std::setw(13) << fixed(p.y, 9)
            << std::setw(13) << fixed(p.z, 9) << "\n";
    }

    ordered_json body;
    ordered_json config{{"k", cfg.k},
                        {"restarts", cfg.restarts},
                        {"iterations", o.iters > 0 ? o.iters : default_iterations(o.k)},
                        {"step_start", cfg.step_start},
                        {"step_end", cfg.step_end},
                        {"penalty_weight", cfg.penalty_weight}};
    body["command"] = "optimize";
    body["inputs_digest"] = digest(config.dump());
    body["seed"] = o.seed;
    body["config"] = config;
    body["area"] = r.area;
    body["congruence_defect"] = r.defect;
    body["best_restart"] = r.best_restart;
    body["restart_objectives"] = r.restart_objectives;
    body["bounds"] = {{"lower_aK", bounds.lower}, {"upper_bK", bounds.upper}};
    body["best_realization"] = to_json(r.best);
    emit(o, body, seconds_since(t0));
    if (!o.csv_path.empty()) write_text_file(o.csv_path, bounds_csv_header() + bounds_csv_row(o.k, r.area));
    return kOk;
}

struct TableRow {
    int k;
    double closed_form;
    std::string shape;
};

int cmd_table(const Options& o, std::ostream& out) {
    auto t0 = std::chrono::steady_clock::now();
    const std::vector<TableRow> rows{
        {4, 8.0 / std::sqrt(3.0), "regular tetrahedron"},
        {5, 1.5 * std::sqrt(15.0), "triangular bipyramid"},
        {6, 4.0 * std::sqrt(3.0), "regular octahedron"},
        {7, 1.25 * std::sqrt(50.0 - 6.0 * std::sqrt(5.0)), "pentagonal bipyramid"},
        {8, 8.0, "Class 10 (equifacetal)"},
        {12, 2.0 * std::sqrt(75.0) - 2.0 * std::sqrt(15.0), "regular icosahedron"},
    };
    const double weight = o.penalty > 0.0 ? o.penalty : 100.0;

    ordered_json body;
    body["command"] = "table";
    body["seed"] = o.seed;
    body["restarts"] = o.restarts;
    body["penalty_weight"] = weight;
    body["rows"] = ordered_json::array();
    std::string csv = bounds_csv_header();

    out << std::setw(3) << "K" << std::setw(14) << "closed form" << std::setw(14) << "optimizer" << std::setw(14)
        << "unconstr." << std::setw(12) << "a_K" << std::setw(12) << "b_K" << "  shape\n";
    for (const auto& row : rows) {
        OptimizerConfig cfg;
        cfg.k = row.k;
        cfg.restarts = o.restarts;
        cfg.iterations = o.iters;
        cfg.seed = o.seed;
        cfg.penalty_weight = weight;
        cfg.threads = o.threads;
        OptimizerResult pen = optimize_sphere(cfg);
        std::optional<OptimizerResult> free_run;
        if (row.k == 8) {
            cfg.penalty_weight = 0.0;
            free_run = optimize_sphere(cfg);
        }
        auto b = asymptotic_bounds(row.k);
        out << std::setw(3) << row.k << std::setw(14) << fixed(row.closed_form) << std::setw(14) << fixed(pen.area)
            << std::setw(14) << (free_run ? fixed(free_run->area) : std::string("-")) << std::setw(12)
            << fixed(b.lower, 4) << std::setw(12) << fixed(b.upper, 4) << "  " << row.shape << "\n";

        ordered_json rj{{"K", row.k},
                        {"shape", row.shape},
                        {"closed_form", row.closed_form},
                        {"optimizer_equifacetal", pen.area},
                        {"optimizer_equifacetal_defect", pen.defect},
                        {"lower_aK", b.lower},
                        {"upper_bK", b.upper}};
        if (free_run) rj["optimizer_unconstrained"] = free_run->area;
        body["rows"].push_back(rj);
        csv += bounds_csv_row(row.k, row.closed_form);
    }
    body["inputs_digest"] = digest(body["rows"].dump());
    emit(o, body, seconds_since(t0));
    if (!o.csv_path.empty()) write_text_file(o.csv_path, csv);
    return kOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Equifacetal polytopes inscribed in the unit sphere: pruning, realization and verification"};
    app.require_subcommand(1);
    Options o;

    auto* table = app.add_subcommand("table", "Known maximizers next to optimizer values and asymptotic bounds");
    table->add_option("--restarts", o.restarts, "Optimizer restarts per row (default 16)")->check(CLI::PositiveNumber);
    table->add_option("--iters", o.iters, "Iterations per restart (0: default)")->check(CLI::NonNegativeNumber);
    table->add_option("--seed", o.seed, "RNG seed");
    table->add_option("--penalty", o.penalty, "Equifacetal penalty weight (0: 100)")->check(CLI::NonNegativeNumber);
    table->add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);
    table->add_option("--out", o.out_path, "Write the JSON report here");
    table->add_option("--emit-bounds-csv", o.csv_path, "Write K,value,lower_aK,upper_bK rows here");

    auto* prune_cmd = app.add_subcommand("prune", "Enumerate and prune isosceles colorings of a catalog");
    prune_cmd->add_option("--catalog", o.catalog, "Catalog file, or k7/k8/warmup for the shipped ones")->required();
    prune_cmd->add_option("--class", o.class_label, "Only this class; prints every coloring's verdict");
    prune_cmd->add_option("--out", o.out_path, "Write the JSON report here");

    auto* verify = app.add_subcommand("verify", "Reproduce the maximum over equifacetal polytopes for k = 7 or 8");
    verify->add_option("--k", o.k, "Vertex count (7 or 8)")->required()->check(CLI::IsMember({7, 8}));
    verify->add_option("--catalog", o.catalog, "Override the shipped catalog");
    verify->add_option("--seed", o.seed, "Seed for the numerical probes");
    verify->add_flag("--strict", o.strict, "Exclude realizations with coplanar adjacent facets");
    verify->add_option("--out", o.out_path, "Write the JSON report here");

    auto* optimize = app.add_subcommand("optimize", "Maximize hull surface area of k points on the sphere");
    optimize->add_option("--k", o.k, "Number of points")->required()->check(CLI::Range(4, 64));
    optimize->add_option("--restarts", o.restarts, "Independent restarts")->check(CLI::PositiveNumber);
    optimize->add_option("--iters", o.iters, "Iterations per restart (0: default)")->check(CLI::NonNegativeNumber);
    optimize->add_option("--seed", o.seed, "RNG seed");
    optimize->add_option("--penalty", o.penalty, "Equifacetal penalty weight")->check(CLI::NonNegativeNumber);
    optimize->add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);
    optimize->add_option("--out", o.out_path, "Write the JSON report here");
    optimize->add_option("--emit-bounds-csv", o.csv_path, "Write K,value,lower_aK,upper_bK for the result");

    try {
        app.parse(argc, argv);
        if (*table && table->count("--restarts") == 0) o.restarts = 16;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (*table) return cmd_table(o, out);
        if (*prune_cmd) return cmd_prune(o, out);
        if (*verify) return cmd_verify(o, out);
        if (*optimize) return cmd_optimize(o, out);
    } catch (const InvalidConfig& e) {
        err << "invalid configuration: " << e.what() << "\n";
        return kUsage;
    } catch (const MalformedCatalog& e) {
        err << "catalog error: " << e.what() << "\n";
        return kUsage;
    } catch (const InvariantViolation& e) {
        err << "catalog error: " << e.what() << "\n";
        return kUsage;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kMismatch;
    }
    return kUsage;
}

}  // namespace equifacet::cli
