#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "preper/graphcat/functional_graph.hpp"

namespace preper {

struct CatalogEntry {
  std::string id;
  bool realized = false;  ///< R-entries are exact targets, N-entries containment targets
  FunctionalGraph graph;
  std::optional<int> genus;
  std::string example_map;  ///< R-entries only
  std::string code;         ///< canonical_code(graph)
};

/// The fifteen catalog graphs, loaded once from the embedded data file.
const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_entry(const std::string& id);
/// Cover relations of the subgraph Hasse diagram, as (smaller, larger).
const std::vector<std::pair<std::string, std::string>>& hasse_edges();

/// SHA-256 of the embedded catalog file and the value recorded next to it.
std::string catalog_checksum();
std::string catalog_recorded_checksum();

struct Classification {
  enum class Kind { exact, admits, unknown } kind = Kind::unknown;
  std::string exact_id;
  std::vector<std::string> admits;
  std::string describe() const;
};

Classification classify(const FunctionalGraph& g);

}  // namespace preper
