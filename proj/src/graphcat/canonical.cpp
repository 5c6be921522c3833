#include "preper/graphcat/canonical.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace preper {

std::string canonical_code(const FunctionalGraph& g) {
  if (!g.valid()) throw std::invalid_argument("not a functional graph");
  const int n = g.size();
  const auto cyc = g.cyclic();
  std::vector<std::vector<int>> preds(n);
  for (int v = 0; v < n; ++v)
    if (!cyc[v]) preds[g.succ[v]].push_back(v);

  std::function<std::string(int)> tree = [&](int v) {
    std::vector<std::string> kids;
    for (int c : preds[v]) kids.push_back(tree(c));
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (auto& k : kids) s += k;
    return s + ")";
  };

  std::vector<bool> done(n, false);
  std::vector<std::string> comps;
  for (int v = 0; v < n; ++v) {
    if (!cyc[v] || done[v]) continue;
    std::vector<std::string> ring;
    int u = v;
    do {
      done[u] = true;
      ring.push_back(tree(u));
      u = g.succ[u];
    } while (u != v);
    std::vector<std::string> best = ring;
    for (std::size_t r = 1; r < ring.size(); ++r) {
      std::rotate(ring.begin(), ring.begin() + 1, ring.end());
      if (ring < best) best = ring;
    }
    std::string s = "[";
    for (auto& t : best) s += t;
    comps.push_back(s + "]");
  }
  std::sort(comps.begin(), comps.end());
  std::string code;
  for (auto& c : comps) code += c;
  return code;
}

bool is_isomorphic(const FunctionalGraph& g, const FunctionalGraph& h) {
  return g.size() == h.size() && canonical_code(g) == canonical_code(h);
}

bool contains_subgraph(const FunctionalGraph& g, const FunctionalGraph& h) {
  if (g.size() > kContainmentCap || h.size() > kContainmentCap)
    throw std::length_error("containment search limited to " + std::to_string(kContainmentCap) + " vertices");
  if (h.size() > g.size()) return false;
  const int n = h.size();
  if (n == 0) return true;

  // Order h's vertices: per component the cycle in successor order, then
  // tree vertices breadth-first away from the cycle.
  const auto hc = h.cyclic();
  std::vector<std::vector<int>> hpreds(n);
  for (int v = 0; v < n; ++v)
    if (!hc[v]) hpreds[h.succ[v]].push_back(v);
  std::vector<int> order;
  std::vector<int> role;  // 0 = cycle start, 1 = cycle continuation, 2 = tree
  std::vector<bool> seen(n, false);
  for (int v = 0; v < n; ++v) {
    if (!hc[v] || seen[v]) continue;
    std::vector<int> cycle;
    int u = v;
    do {
      seen[u] = true;
      cycle.push_back(u);
      u = h.succ[u];
    } while (u != v);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      order.push_back(cycle[i]);
      role.push_back(i == 0 ? 0 : 1);
    }
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (int p : hpreds[order[i]]) {
        if (seen[p]) continue;
        seen[p] = true;
        order.push_back(p);
        role.push_back(2);
      }
    }
  }

  std::vector<std::vector<int>> gpreds(g.size());
  for (int v = 0; v < g.size(); ++v) gpreds[g.succ[v]].push_back(v);
  std::vector<int> img(n, -1);
  std::vector<bool> used(g.size(), false);

  // A cycle closes when the successor of its last vertex's image is the
  // image of the cycle start.
  auto closes = [&](std::size_t i) {
    const int v = order[i];
    const int nxt = h.succ[v];
    return img[nxt] < 0 || g.succ[img[v]] == img[nxt];
  };

  std::function<bool(std::size_t)> place = [&](std::size_t i) -> bool {
    if (i == order.size()) return true;
    const int v = order[i];
    auto attempt = [&](int w) {
      if (used[w]) return false;
      img[v] = w;
      used[w] = true;
      bool ok = closes(i);
      // predecessors already placed must map onto w
      if (ok && role[i] == 1) {
        // v's predecessor on the cycle was placed just before it
        ok = g.succ[img[order[i - 1]]] == w;
      }
      if (ok && place(i + 1)) return true;
      used[w] = false;
      img[v] = -1;
      return false;
    };
    if (role[i] == 0) {
      for (int w = 0; w < g.size(); ++w)
        if (attempt(w)) return true;
      return false;
    }
    if (role[i] == 1) return attempt(g.succ[img[order[i - 1]]]);
    for (int w : gpreds[img[h.succ[v]]])
      if (attempt(w)) return true;
    return false;
  };
  return place(0);
}

}  // namespace preper
