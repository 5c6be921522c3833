#include "preper/graphcat/catalog.hpp"

#include <stdexcept>

#include "json.hpp"
#include "preper/embedded_data.hpp"
#include "preper/graphcat/canonical.hpp"
#include "preper/graphcat/graph_io.hpp"

namespace preper {

namespace {

struct Loaded {
  std::vector<CatalogEntry> entries;
  std::vector<std::pair<std::string, std::string>> edges;
};

const Loaded& loaded() {
  static const Loaded data = [] {
    Loaded out;
    auto j = nlohmann::json::parse(embedded::kCatalogJson);
    for (const auto& e : j.at("entries")) {
      CatalogEntry c;
      c.id = e.at("id").get<std::string>();
      c.realized = e.at("kind").get<std::string>() == "realized";
      c.graph = graph_from_json(e.at("graph"));
      if (e.contains("genus")) c.genus = e.at("genus").get<int>();
      if (e.contains("example_map")) c.example_map = e.at("example_map").get<std::string>();
      c.code = canonical_code(c.graph);
      out.entries.push_back(std::move(c));
    }
    for (const auto& p : j.at("hasse_edges")) out.edges.emplace_back(p.at(0).get<std::string>(), p.at(1).get<std::string>());
    return out;
  }();
  return data;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() { return loaded().entries; }

const CatalogEntry& catalog_entry(const std::string& id) {
  for (const auto& e : catalog())
    if (e.id == id) return e;
  throw std::out_of_range("no catalog entry " + id);
}

const std::vector<std::pair<std::string, std::string>>& hasse_edges() { return loaded().edges; }

std::string catalog_checksum() { return embedded::kCatalogSha256; }
std::string catalog_recorded_checksum() { return embedded::kCatalogRecordedSha256; }

std::string Classification::describe() const {
  switch (kind) {
    case Kind::exact:
      return exact_id;
    case Kind::admits: {
      std::string s = "admits";
      for (const auto& a : admits) s += " " + a;
      return s;
    }
    case Kind::unknown:
      break;
  }
  return "unknown";
}

Classification classify(const FunctionalGraph& g) {
  Classification out;
  const std::string code = canonical_code(g);
  for (const auto& e : catalog()) {
    if (e.realized && e.code == code) {
      out.kind = Classification::Kind::exact;
      out.exact_id = e.id;
      return out;
    }
  }
  if (g.size() <= kContainmentCap) {
    for (const auto& e : catalog())
      if (!e.realized && contains_subgraph(g, e.graph)) out.admits.push_back(e.id);
  }
  if (!out.admits.empty()) out.kind = Classification::Kind::admits;
  return out;
}

}  // namespace preper
