#include "cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "equifacet");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = equifacet::cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::filesystem::path scratch(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / "equifacet_cli_tests";
    std::filesystem::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST_CASE("help and usage errors") {
    CHECK(run({"--help"}).code == 0);
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"verify"}).code == 2);
    CHECK(run({"verify", "--k", "9"}).code == 2);
    CHECK(run({"optimize", "--k", "3"}).code == 2);
    CHECK(run({"optimize", "--k", "5", "--restarts", "0"}).code == 2);
    CHECK(run({"prune", "--catalog", "/does/not/exist.catalog"}).code == 2);
    CHECK(run({"prune", "--catalog", "k7", "--class", "K7-C9"}).code == 2);
}

TEST_CASE("malformed catalog file is a usage error") {
    auto p = scratch("broken.catalog");
    std::ofstream(p) << "{\"entries\": [";
    Run r = run({"prune", "--catalog", p.string()});
    CHECK(r.code == 2);
    CHECK(r.err.find("catalog error") != std::string::npos);
}

TEST_CASE("verify exit codes") {
    CHECK(run({"verify", "--k", "7"}).code == 0);
    Run r = run({"verify", "--k", "8"});
    CHECK(r.code == 0);
    CHECK(r.out.find("K8-C10") != std::string::npos);
    CHECK(run({"verify", "--k", "8", "--strict"}).code == 1);
}

TEST_CASE("prune writes a JSON report") {
    auto p = scratch("prune.json");
    Run r = run({"prune", "--catalog", "k8.catalog", "--class", "K8-C14", "--out", p.string()});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(slurp(p));
    CHECK(j["body"]["classes"].size() == 1);
    CHECK(j["body"]["classes"][0]["survivor_orbits"] == 3);
    CHECK(j.contains("meta"));
}

TEST_CASE("report bodies are byte-identical for a fixed seed") {
    auto a = scratch("opt_a.json"), b = scratch("opt_b.json");
    std::vector<std::string> base{"optimize", "--k", "5", "--restarts", "3", "--iters", "800", "--seed", "9"};
    auto args_a = base, args_b = base;
    args_a.insert(args_a.end(), {"--out", a.string()});
    args_b.insert(args_b.end(), {"--out", b.string(), "--threads", "2"});
    REQUIRE(run(args_a).code == 0);
    REQUIRE(run(args_b).code == 0);
    auto ja = nlohmann::ordered_json::parse(slurp(a));
    auto jb = nlohmann::ordered_json::parse(slurp(b));
    CHECK(ja["body"].dump() == jb["body"].dump());

    auto va = scratch("verify_a.json"), vb = scratch("verify_b.json");
    REQUIRE(run({"verify", "--k", "8", "--out", va.string()}).code == 0);
    REQUIRE(run({"verify", "--k", "8", "--out", vb.string()}).code == 0);
    CHECK(nlohmann::ordered_json::parse(slurp(va))["body"].dump() ==
          nlohmann::ordered_json::parse(slurp(vb))["body"].dump());
}

TEST_CASE("bounds CSV") {
    auto p = scratch("bounds.csv");
    REQUIRE(run({"optimize", "--k", "4", "--restarts", "2", "--iters", "500", "--emit-bounds-csv", p.string()}).code == 0);
    std::string csv = slurp(p);
    CHECK(csv.rfind("K,value,lower_aK,upper_bK\n", 0) == 0);
    CHECK(csv.find("\n4,") != std::string::npos);
}
