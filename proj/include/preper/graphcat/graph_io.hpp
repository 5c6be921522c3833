#pragma once

#include <string>

#include "json.hpp"
#include "preper/graphcat/functional_graph.hpp"

namespace preper {

/// {"vertices": n, "successor": [...], "labels": [...]}
nlohmann::json graph_to_json(const FunctionalGraph& g);
/// Throws std::invalid_argument on malformed input (including an empty graph).
FunctionalGraph graph_from_json(const nlohmann::json& j);

/// DOT digraph; labels are used as node labels with "inf" shown as ∞.
std::string to_dot(const FunctionalGraph& g, const std::string& name = "G");

}  // namespace preper
