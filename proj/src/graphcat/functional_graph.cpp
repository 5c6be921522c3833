#include "preper/graphcat/functional_graph.hpp"

namespace preper {

bool FunctionalGraph::valid() const {
  const int n = size();
  if (!labels.empty() && static_cast<int>(labels.size()) != n) return false;
  for (int s : succ)
    if (s < 0 || s >= n) return false;
  return true;
}

std::vector<bool> FunctionalGraph::cyclic() const {
  const int n = size();
  // Repeatedly strip vertices of in-degree zero; what remains lies on cycles.
  std::vector<int> indeg = in_degree();
  std::vector<bool> alive(n, true);
  std::vector<int> stack;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) stack.push_back(v);
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    alive[v] = false;
    if (--indeg[succ[v]] == 0) stack.push_back(succ[v]);
  }
  return alive;
}

std::vector<int> FunctionalGraph::in_degree() const {
  std::vector<int> d(succ.size(), 0);
  for (int s : succ) ++d[s];
  return d;
}

}  // namespace preper
