#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "genus_forge/manifold.hpp"

namespace genus {

inline constexpr int kCatalogSchemaVersion = 1;

struct CatalogFile {
  int schema_version = kCatalogSchemaVersion;
  std::vector<ManifoldData> entries;

  const ManifoldData* find(std::string_view name) const;
  /// File entries first, then the builtin families (CP<n>, S<n>, T<k>, K3, HP2).
  ManifoldData lookup(std::string_view name) const;
};

nlohmann::json to_json(const ManifoldData& m);
/// Strict conversion: unknown fields and malformed values throw CatalogError.
ManifoldData manifold_from_json(const nlohmann::json& j);

/// Parses and validates catalog text; `source` names the input in errors.
CatalogFile parse_catalog(std::string_view text, const std::string& source = "<catalog>");
CatalogFile load_catalog(const std::filesystem::path& path);
/// Canonical serialisation (sorted keys, two-space indent, trailing newline).
std::string save_catalog(const CatalogFile& catalog);

/// $GENUS_FORGE_CATALOG if set, else the shipped data/catalog.json.
std::filesystem::path default_catalog_path();

}  // namespace genus
