#pragma once

#include "equifacet/coloring.hpp"
#include "equifacet/graph.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace equifacet {

struct ReferenceColoring {
    std::string name;
    std::vector<Edge> red_edges;
};

struct CatalogEntry {
    PolytopeGraph graph;
    std::vector<ReferenceColoring> references;

    EdgeColoring reference(std::string_view name) const;
};

// Parses a catalog document. Throws MalformedCatalog on syntax or schema
// errors and InvariantViolation when an entry is not a simplicial polytope
// graph matching its degree checksum.
std::vector<CatalogEntry> load_catalog(std::string_view text, std::string_view source = "<catalog>");
std::vector<CatalogEntry> load_catalog_file(const std::filesystem::path& path);

// Catalogs compiled into the library: "k7", "k8", "warmup".
std::string_view builtin_catalog_text(std::string_view name);
std::vector<CatalogEntry> builtin_catalog(std::string_view name);

const CatalogEntry& find_class(const std::vector<CatalogEntry>& catalog, std::string_view label);

}  // namespace equifacet
