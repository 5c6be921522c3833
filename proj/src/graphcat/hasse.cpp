#include "preper/graphcat/hasse.hpp"

#include <algorithm>
#include <set>

#include "preper/graphcat/canonical.hpp"
#include "preper/graphcat/catalog.hpp"

namespace preper {

bool ClosureReport::all_covered() const {
  return std::all_of(cases.begin(), cases.end(), [](const ClosureCase& c) { return c.covered; });
}

FunctionalGraph add_cycle_step(const FunctionalGraph& g, int n) {
  FunctionalGraph out = g;
  const int base = g.size();
  for (int i = 0; i < n; ++i) out.succ.push_back(base + (i + 1) % n);
  for (int i = 0; i < n; ++i) out.succ.push_back(base + i);
  if (!out.labels.empty()) out.labels.resize(out.succ.size());
  return out;
}

FunctionalGraph add_preimages_step(const FunctionalGraph& g, int v, int count) {
  FunctionalGraph out = g;
  for (int i = 0; i < count; ++i) out.succ.push_back(v);
  if (!out.labels.empty()) out.labels.resize(out.succ.size());
  return out;
}

namespace {

// Cycle lengths of g.
std::vector<int> cycle_lengths(const FunctionalGraph& g) {
  auto cyc = g.cyclic();
  std::vector<bool> done(g.size(), false);
  std::vector<int> out;
  for (int v = 0; v < g.size(); ++v) {
    if (!cyc[v] || done[v]) continue;
    int len = 0, u = v;
    do {
      done[u] = true;
      ++len;
      u = g.succ[u];
    } while (u != v);
    out.push_back(len);
  }
  return out;
}

std::string vertex_name(const FunctionalGraph& g, int v) {
  if (!g.labels.empty() && !g.labels[v].empty()) return g.labels[v];
  return "#" + std::to_string(v);
}

ClosureCase judge(const std::string& id, const std::string& step, const FunctionalGraph& result) {
  ClosureCase c{id, step, "", false};
  const std::string code = canonical_code(result);
  std::set<std::string> diagram;
  for (const auto& [a, b] : hasse_edges()) {
    diagram.insert(a);
    diagram.insert(b);
  }
  for (const auto& e : catalog()) {
    if (diagram.count(e.id) && e.code == code) {
      c.outcome = "isomorphic to " + e.id;
      c.covered = true;
      return c;
    }
  }
  std::string found;
  for (const auto& e : catalog()) {
    if (e.realized) continue;
    if (contains_subgraph(result, e.graph)) found += (found.empty() ? "" : ", ") + e.id;
  }
  if (!found.empty()) {
    c.outcome = "contains " + found;
    c.covered = true;
    return c;
  }
  c.outcome = "UNCOVERED";
  return c;
}

}  // namespace

ClosureReport verify_hasse_closure(const PeriodicBudget& budget) {
  ClosureReport report;
  report.assumptions = {
      "new cycles have length 1 or 2 (no rational periodic points of period > 2 outside the critical cycle)",
      "at most " + std::to_string(budget.fixed_points) + " fixed points and " + std::to_string(budget.period_two_points) +
          " points of period 2 (degrees of the first and second dynatomic polynomials)",
      "every vertex has at most two preimages",
      "the PCF graph R3P0 is excluded; its class is unique and has no further rational preperiodic points"};
  std::vector<std::string> ids;
  for (const auto& [a, b] : hasse_edges())
    for (const auto& x : {a, b})
      if (std::find(ids.begin(), ids.end(), x) == ids.end()) ids.push_back(x);

  for (const auto& id : ids) {
    const auto& entry = catalog_entry(id);
    const auto& g = entry.graph;
    auto lengths = cycle_lengths(g);
    const int fixed = static_cast<int>(std::count(lengths.begin(), lengths.end(), 1));
    const int two = 2 * static_cast<int>(std::count(lengths.begin(), lengths.end(), 2));
    for (int n : {1, 2}) {
      std::string step = "add " + std::to_string(n) + "-cycle with tails";
      bool over = n == 1 ? fixed + 1 > budget.fixed_points : two + 2 > budget.period_two_points;
      if (over) {
        report.cases.push_back({id, step,
                                std::string("not applicable: exceeds the ") +
                                    (n == 1 ? "fixed-point" : "period-2") + " budget",
                                true});
        continue;
      }
      report.cases.push_back(judge(id, step, add_cycle_step(g, n)));
    }
    const auto cyc = g.cyclic();
    const auto indeg = g.in_degree();
    for (int v = 0; v < g.size(); ++v) {
      if (cyc[v]) continue;
      const int missing = 2 - indeg[v];
      std::string step = "add " + std::to_string(std::max(missing, 0)) + " preimages to " + vertex_name(g, v);
      if (missing <= 0) {
        report.cases.push_back({id, step, "not applicable: vertex already has two preimages", true});
        continue;
      }
      report.cases.push_back(judge(id, step, add_preimages_step(g, v, missing)));
    }
  }
  return report;
}

}  // namespace preper
