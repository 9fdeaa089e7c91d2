#include "equifacet/catalog.hpp"

#include "equifacet/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace equifacet {

namespace detail {
extern const std::string_view kCatalogK7;
extern const std::string_view kCatalogK8;
extern const std::string_view kCatalogWarmup;
}  // namespace detail

namespace {

using nlohmann::json;

std::string line_context(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    std::size_t begin = byte > text.size() ? text.size() : byte;
    while (begin > 0 && text[begin - 1] != '\n') --begin;
    std::size_t end = text.find('\n', begin);
    std::string snippet(text.substr(begin, end == std::string_view::npos ? std::string_view::npos : end - begin));
    if (snippet.size() > 80) snippet = snippet.substr(0, 80) + "...";
    return "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + snippet;
}

template <class T>
T field(const json& e, const char* name, const std::string& where) {
    if (!e.contains(name)) throw MalformedCatalog(where + ": missing field '" + name + "'");
    try {
        return e.at(name).get<T>();
    } catch (const json::exception& ex) {
        throw MalformedCatalog(where + ": field '" + name + "' has the wrong type (" + ex.what() + ")");
    }
}

std::vector<Edge> pairs(const json& arr, const std::string& where) {
    std::vector<Edge> out;
    for (const auto& p : arr) {
        if (!p.is_array() || p.size() != 2) throw MalformedCatalog(where + ": expected a pair of vertex indices");
        out.push_back({p[0].get<int>(), p[1].get<int>()});
    }
    return out;
}

}  // namespace

EdgeColoring CatalogEntry::reference(std::string_view name) const {
    for (const auto& r : references) {
        if (r.name == name) return coloring_from_red_edges(graph, r.red_edges);
    }
    throw InvalidArgument(graph.label() + ": no reference coloring named '" + std::string(name) + "'");
}

std::vector<CatalogEntry> load_catalog(std::string_view text, std::string_view source) {
    const std::string src(source);
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& ex) {
        throw MalformedCatalog(src + ": parse error at " + line_context(text, ex.byte == 0 ? 0 : ex.byte - 1) + " (" +
                               ex.what() + ")");
    }
    const json* entries = &doc;
    if (doc.is_object()) {
        if (!doc.contains("entries")) throw MalformedCatalog(src + ": top-level object has no 'entries' list");
        entries = &doc["entries"];
    }
    if (!entries->is_array()) throw MalformedCatalog(src + ": expected a list of catalog entries");
    if (entries->empty()) throw MalformedCatalog(src + ": catalog has no entries");

    std::vector<CatalogEntry> out;
    for (std::size_t i = 0; i < entries->size(); ++i) {
        const json& e = (*entries)[i];
        std::string where = src + ": entry " + std::to_string(i);
        if (!e.is_object()) throw MalformedCatalog(where + ": expected an object");
        auto label = field<std::string>(e, "class_label", where);
        where += " (" + label + ")";
        int k = field<int>(e, "k", where);
        std::vector<Edge> edges;
        std::vector<Facet> facets;
        std::vector<int> degrees;
        std::vector<std::string> names;
        try {
            edges = pairs(field<json>(e, "edges", where), where);
            for (const auto& f : field<json>(e, "facets", where)) {
                if (!f.is_array() || f.size() != 3) throw MalformedCatalog(where + ": facets must be index triples");
                facets.push_back({f[0].get<int>(), f[1].get<int>(), f[2].get<int>()});
            }
            degrees = field<std::vector<int>>(e, "expected_degree_sequence", where);
            if (e.contains("vertex_names")) names = e["vertex_names"].get<std::vector<std::string>>();
        } catch (const json::exception& ex) {
            throw MalformedCatalog(where + ": " + ex.what());
        }
        if (static_cast<int>(degrees.size()) != k) {
            throw InvariantViolation(where + ": expected_degree_sequence must list k degrees");
        }
        CatalogEntry entry{PolytopeGraph::build(label, k, std::move(edges), std::move(facets), std::move(degrees),
                                                std::move(names)),
                           {}};
        if (e.contains("reference_colorings")) {
            for (const auto& r : e["reference_colorings"]) {
                ReferenceColoring ref{field<std::string>(r, "name", where), pairs(field<json>(r, "red_edges", where), where)};
                EdgeColoring c = coloring_from_red_edges(entry.graph, ref.red_edges);
                if (!is_facet_isosceles(entry.graph, c)) {
                    throw InvariantViolation(where + ": reference coloring '" + ref.name +
                                             "' does not give every facet exactly one red edge");
                }
                entry.references.push_back(std::move(ref));
            }
        }
        out.push_back(std::move(entry));
    }
    return out;
}

std::vector<CatalogEntry> load_catalog_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MalformedCatalog(path.string() + ": cannot open catalog file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return load_catalog(ss.str(), path.string());
}

std::string_view builtin_catalog_text(std::string_view name) {
    if (name == "k7") return detail::kCatalogK7;
    if (name == "k8") return detail::kCatalogK8;
    if (name == "warmup") return detail::kCatalogWarmup;
    throw InvalidArgument("unknown built-in catalog '" + std::string(name) + "'");
}

std::vector<CatalogEntry> builtin_catalog(std::string_view name) {
    return load_catalog(builtin_catalog_text(name), std::string(name) + ".catalog");
}

const CatalogEntry& find_class(const std::vector<CatalogEntry>& catalog, std::string_view label) {
    for (const auto& e : catalog) {
        if (e.graph.label() == label) return e;
    }
    throw InvalidArgument("no class labelled '" + std::string(label) + "' in catalog");
}

}  // namespace equifacet
