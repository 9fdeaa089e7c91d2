#pragma once

#include <equifacet/coloring.hpp>
#include <equifacet/geom.hpp>
#include <equifacet/verify.hpp>

#include <json.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace equifacet::cli {

using nlohmann::ordered_json;

std::string digest(std::string_view bytes);

ordered_json to_json(const Point3& p);
ordered_json to_json(const Realization& r);
ordered_json coloring_json(const PolytopeGraph& g, const EdgeColoring& c);
ordered_json verdict_json(const PolytopeGraph& g, const EliminationVerdict& v);
ordered_json class_result_json(const PolytopeGraph* g, const ClassResult& r);
ordered_json verify_json(const VerifyReport& rep, const std::vector<CatalogEntry>& catalog);

// {"body": ..., "meta": {"wall_time_s": ...}}. The body is the
// reproducible part.
std::string render_report(const ordered_json& body, double wall_seconds);

void write_text_file(const std::string& path, const std::string& text);

}  // namespace equifacet::cli
