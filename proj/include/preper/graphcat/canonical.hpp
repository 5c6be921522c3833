#pragma once

#include <string>

#include "preper/graphcat/functional_graph.hpp"

namespace preper {

/// Isomorphism invariant: trees hanging on cycle vertices as sorted nested
/// parentheses, each cycle rotated to its lexicographically least form,
/// components sorted.
std::string canonical_code(const FunctionalGraph& g);

bool is_isomorphic(const FunctionalGraph& g, const FunctionalGraph& h);

constexpr int kContainmentCap = 32;

/// True when h embeds into g by an injective successor-preserving map.
/// Throws std::length_error when either graph exceeds kContainmentCap.
bool contains_subgraph(const FunctionalGraph& g, const FunctionalGraph& h);

}  // namespace preper
