#pragma once

#include <string>
#include <vector>

#include "preper/graphcat/functional_graph.hpp"

namespace preper {

/// Upper bounds on periodic points outside the critical 3-cycle: the degrees
/// of Phi*_1 (three fixed points) and Phi*_2 (one 2-cycle).
struct PeriodicBudget {
  int fixed_points = 3;
  int period_two_points = 2;
};

struct ClosureCase {
  std::string graph_id;
  std::string step;     ///< e.g. "add 2-cycle", "add 2 preimages to vertex 6/11"
  std::string outcome;  ///< "isomorphic to R3P4", "contains N3E1", "not applicable: ..." or "UNCOVERED"
  bool covered = false;
};

struct ClosureReport {
  std::vector<ClosureCase> cases;
  bool all_covered() const;
  std::vector<std::string> assumptions;
};

/// Graph with a new n-cycle, each new cycle vertex receiving one tail vertex.
FunctionalGraph add_cycle_step(const FunctionalGraph& g, int n);
/// Graph with `count` new preimages of vertex v.
FunctionalGraph add_preimages_step(const FunctionalGraph& g, int v, int count);

/// Applies both recursion steps to every non-PCF graph of the Hasse diagram
/// and checks each result against the diagram and the nine inadmissible graphs.
ClosureReport verify_hasse_closure(const PeriodicBudget& budget = {});

}  // namespace preper
