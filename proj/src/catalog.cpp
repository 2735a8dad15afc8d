#include "genus_forge/catalog.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

namespace genus {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& message) { throw Error(ErrorKind::CatalogError, message); }

json numbers_to_json(const CharNumbers& numbers) {
  json out = json::object();
  for (const auto& [p, v] : numbers) out[partition_key(p)] = v;
  return out;
}

CharNumbers numbers_from_json(const json& j, const std::string& entry, const char* field) {
  if (!j.is_object()) fail(entry + ": '" + field + "' must be an object");
  CharNumbers out;
  for (const auto& [key, value] : j.items()) {
    Partition p;
    try {
      p = parse_partition(key);
    } catch (const Error&) {
      fail(entry + ": " + field + " has malformed partition key '" + key + "'");
    }
    if (partition_key(p) != key) fail(entry + ": partition key '" + key + "' must be written descending");
    if (!value.is_number_integer()) fail(entry + ": " + field + "['" + key + "'] must be an integer");
    out[p] = value.get<long long>();
  }
  return out;
}

std::pair<int, int> line_column(std::string_view text, std::size_t byte) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

json to_json(const ManifoldData& m) {
  json j;
  j["name"] = m.name;
  j["real_dim"] = m.real_dim;
  if (m.complex_dim) j["complex_dim"] = *m.complex_dim;
  if (!m.chern_numbers.empty()) j["chern_numbers"] = numbers_to_json(m.chern_numbers);
  if (!m.pontryagin_numbers.empty()) j["pontryagin_numbers"] = numbers_to_json(m.pontryagin_numbers);
  j["spin"] = m.spin;
  j["string"] = m.string;
  if (!m.asserted_genera.empty()) {
    json a = json::object();
    for (const auto& [kind, value] : m.asserted_genera) a[std::string(to_string(kind))] = value.to_string();
    j["asserted"] = a;
  }
  return j;
}

ManifoldData manifold_from_json(const json& j) {
  static const std::set<std::string> known = {"name", "real_dim", "complex_dim", "chern_numbers",
                                              "pontryagin_numbers", "spin", "string", "asserted"};
  if (!j.is_object()) fail("catalog entry must be an object");
  if (!j.contains("name") || !j["name"].is_string()) fail("catalog entry without a string 'name'");
  ManifoldData m;
  m.name = j["name"].get<std::string>();
  for (const auto& [key, value] : j.items())
    if (!known.contains(key)) fail(m.name + ": unknown field '" + key + "'");
  if (!j.contains("real_dim") || !j["real_dim"].is_number_integer()) fail(m.name + ": 'real_dim' must be an integer");
  m.real_dim = j["real_dim"].get<int>();
  if (j.contains("complex_dim")) {
    if (!j["complex_dim"].is_number_integer()) fail(m.name + ": 'complex_dim' must be an integer");
    m.complex_dim = j["complex_dim"].get<int>();
  }
  if (j.contains("chern_numbers")) m.chern_numbers = numbers_from_json(j["chern_numbers"], m.name, "chern_numbers");
  if (j.contains("pontryagin_numbers"))
    m.pontryagin_numbers = numbers_from_json(j["pontryagin_numbers"], m.name, "pontryagin_numbers");
  for (const char* flag : {"spin", "string"}) {
    if (!j.contains(flag) || !j[flag].is_boolean()) fail(m.name + ": '" + flag + "' must be a boolean");
  }
  m.spin = j["spin"].get<bool>();
  m.string = j["string"].get<bool>();
  if (j.contains("asserted")) {
    if (!j["asserted"].is_object()) fail(m.name + ": 'asserted' must be an object");
    for (const auto& [key, value] : j["asserted"].items()) {
      if (!value.is_string()) fail(m.name + ": asserted '" + key + "' must be a \"num/den\" string");
      try {
        m.asserted_genera[parse_genus_kind(key)] = Rational::parse(value.get<std::string>());
      } catch (const Error& e) {
        fail(m.name + ": asserted '" + key + "': " + e.what());
      }
    }
  }
  try {
    validate(m);
  } catch (const Error& e) {
    fail(std::string("invalid entry ") + e.what());
  }
  return m;
}

const ManifoldData* CatalogFile::find(std::string_view name) const {
  for (const auto& e : entries)
    if (e.name == name) return &e;
  return nullptr;
}

ManifoldData CatalogFile::lookup(std::string_view name) const {
  if (const auto* e = find(name)) return *e;
  return builtin(name);
}

CatalogFile parse_catalog(std::string_view text, const std::string& source) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    fail(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": JSON parse error");
  }
  if (!doc.is_object()) fail(source + ": top level must be an object");
  for (const auto& [key, value] : doc.items())
    if (key != "schema_version" && key != "entries") fail(source + ": unknown field '" + key + "'");
  if (!doc.contains("schema_version") || !doc["schema_version"].is_number_integer())
    fail(source + ": missing integer 'schema_version'");
  CatalogFile cat;
  cat.schema_version = doc["schema_version"].get<int>();
  if (cat.schema_version != kCatalogSchemaVersion)
    fail(source + ": unsupported schema_version " + std::to_string(cat.schema_version));
  if (!doc.contains("entries") || !doc["entries"].is_array()) fail(source + ": 'entries' must be an array");
  std::set<std::string> names;
  for (const auto& entry : doc["entries"]) {
    ManifoldData m = manifold_from_json(entry);
    if (!names.insert(m.name).second) fail(source + ": duplicate entry name '" + m.name + "'");
    cat.entries.push_back(std::move(m));
  }
  return cat;
}

CatalogFile load_catalog(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open catalog " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_catalog(buf.str(), path.string());
}

std::string save_catalog(const CatalogFile& catalog) {
  json doc;
  doc["schema_version"] = catalog.schema_version;
  doc["entries"] = json::array();
  for (const auto& e : catalog.entries) doc["entries"].push_back(to_json(e));
  return doc.dump(2) + "\n";
}

std::filesystem::path default_catalog_path() {
  if (const char* env = std::getenv("GENUS_FORGE_CATALOG"); env && *env) return env;
#ifdef GENUS_FORGE_DEFAULT_CATALOG
  return GENUS_FORGE_DEFAULT_CATALOG;
#else
  return "data/catalog.json";
#endif
}

}  // namespace genus
