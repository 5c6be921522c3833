#pragma once

#include <string>
#include <vector>

namespace preper {

/// Finite graph in which every vertex has exactly one successor.
struct FunctionalGraph {
  std::vector<int> succ;
  std::vector<std::string> labels;  ///< optional; empty or one per vertex

  int size() const { return static_cast<int>(succ.size()); }
  bool valid() const;
  /// Vertices lying on a cycle.
  std::vector<bool> cyclic() const;
  /// Number of predecessors of each vertex.
  std::vector<int> in_degree() const;
};

}  // namespace preper
