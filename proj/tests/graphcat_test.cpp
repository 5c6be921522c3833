#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "json.hpp"
#include "preper/graphcat/canonical.hpp"
#include "preper/graphcat/catalog.hpp"
#include "preper/graphcat/graph_io.hpp"
#include "preper/graphcat/hasse.hpp"
#include "preper/p1dyn/dynamics.hpp"
#include "preper/p1dyn/parse_map.hpp"
#include "test_util.hpp"

using namespace preper;

namespace {

// Relabels vertex v as perm[v].
FunctionalGraph permute(const FunctionalGraph& g, const std::vector<int>& perm) {
  FunctionalGraph out;
  out.succ.assign(g.size(), 0);
  for (int v = 0; v < g.size(); ++v) out.succ[perm[v]] = perm[g.succ[v]];
  return out;
}

std::vector<int> random_perm(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), testutil::rng());
  return p;
}

// Isomorphism by trying every bijection; for small graphs only.
bool brute_isomorphic(const FunctionalGraph& g, const FunctionalGraph& h) {
  if (g.size() != h.size()) return false;
  std::vector<int> p(g.size());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int v = 0; v < g.size() && ok; ++v) ok = p[g.succ[v]] == h.succ[p[v]];
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

// Injective successor-preserving maps h -> g, by plain enumeration of images.
bool brute_contains(const FunctionalGraph& g, const FunctionalGraph& h) {
  std::vector<int> img(h.size(), -1);
  std::vector<bool> used(g.size(), false);
  std::function<bool(int)> go = [&](int v) {
    if (v == h.size()) {
      for (int u = 0; u < h.size(); ++u)
        if (img[h.succ[u]] != g.succ[img[u]]) return false;
      return true;
    }
    for (int w = 0; w < g.size(); ++w) {
      if (used[w]) continue;
      // Prune on already-placed neighbours.
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) {
        if (h.succ[u] == v && g.succ[img[u]] != w) ok = false;
        if (h.succ[v] == u && g.succ[w] != img[u]) ok = false;
      }
      if (h.succ[v] == v && g.succ[w] != w) ok = false;
      if (!ok) continue;
      used[w] = true;
      img[v] = w;
      if (go(v + 1)) return true;
      used[w] = false;
    }
    img[v] = -1;
    return false;
  };
  return go(0);
}

FunctionalGraph random_graph(int n) {
  FunctionalGraph g;
  for (int i = 0; i < n; ++i) g.succ.push_back(static_cast<int>(testutil::rand_int(0, n - 1)));
  return g;
}

const FunctionalGraph& G(const std::string& id) { return catalog_entry(id).graph; }

}  // namespace

TEST_CASE("catalog shape") {
  const auto& c = catalog();
  REQUIRE(c.size() == 15);
  std::vector<int> genera;
  for (const auto& e : c) {
    CHECK(e.graph.valid());
    if (e.realized) {
      CHECK_FALSE(e.example_map.empty());
    } else {
      REQUIRE(e.genus);
      genera.push_back(*e.genus);
    }
  }
  CHECK(genera == std::vector<int>{1, 1, 1, 2, 2, 2, 3, 6, 5});
  CHECK(catalog_checksum() == catalog_recorded_checksum());
  CHECK(G("R3P0").size() == 4);
  CHECK(G("R3P5").size() == 11);
  CHECK(G("N3H2").size() == 13);
  // All fifteen graphs are pairwise non-isomorphic.
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j) CHECK(c[i].code != c[j].code);
}

TEST_CASE("canonical code is a relabelling invariant") {
  FunctionalGraph fixed{{0}, {}};
  CHECK(canonical_code(fixed) == canonical_code(permute(fixed, {0})));
  for (const auto& e : catalog()) {
    for (int k = 0; k < 5; ++k) CHECK(canonical_code(permute(e.graph, random_perm(e.graph.size()))) == e.code);
  }
  CHECK(canonical_code(G("R3P3")) != canonical_code(G("R3P4")));
  CHECK_FALSE(is_isomorphic(G("N3E2"), G("N3M3")));
}

TEST_CASE("canonical code agrees with brute-force isomorphism") {
  // Exhaustive over random pairs on up to 7 vertices.
  for (int trial = 0; trial < 300; ++trial) {
    int n = static_cast<int>(testutil::rand_int(1, 7));
    auto g = random_graph(n);
    auto h = trial % 3 == 0 ? permute(g, random_perm(n)) : random_graph(n);
    CHECK(is_isomorphic(g, h) == brute_isomorphic(g, h));
  }
  // Every permutation of a small catalog graph.
  const auto& r3p1 = G("R3P1");
  std::vector<int> p(r3p1.size());
  std::iota(p.begin(), p.end(), 0);
  do {
    CHECK(canonical_code(permute(r3p1, p)) == canonical_code(r3p1));
  } while (std::next_permutation(p.begin(), p.end()));
}

TEST_CASE("R3P5 under a permutation matches brute force") {
  auto h = permute(G("R3P5"), random_perm(11));
  CHECK(canonical_code(h) == catalog_entry("R3P5").code);
  // Same-size containment is isomorphism.
  CHECK(brute_contains(h, G("R3P5")));
}

TEST_CASE("subgraph containment") {
  CHECK(contains_subgraph(G("R3P2"), G("R3P1")));
  CHECK(contains_subgraph(G("R3P5"), G("R3P4")));
  CHECK_FALSE(contains_subgraph(G("R3P1"), G("R3P2")));
  for (const auto& [a, b] : hasse_edges()) {
    CAPTURE(a);
    CAPTURE(b);
    CHECK(contains_subgraph(G(b), G(a)));
  }
  FunctionalGraph big;
  big.succ.assign(kContainmentCap + 1, 0);
  CHECK_THROWS_AS(contains_subgraph(big, G("R3P0")), std::length_error);
}

TEST_CASE("containment agrees with brute force") {
  for (int trial = 0; trial < 200; ++trial) {
    auto g = random_graph(static_cast<int>(testutil::rand_int(1, 8)));
    auto h = random_graph(static_cast<int>(testutil::rand_int(1, 5)));
    CHECK(contains_subgraph(g, h) == brute_contains(g, h));
  }
  for (const auto& a : catalog())
    for (const auto& b : catalog()) {
      if (b.graph.size() > a.graph.size()) continue;
      CAPTURE(a.id);
      CAPTURE(b.id);
      CHECK(contains_subgraph(a.graph, b.graph) == brute_contains(a.graph, b.graph));
    }
}

TEST_CASE("containment is transitive on the catalog") {
  const auto& c = catalog();
  for (const auto& a : c)
    for (const auto& b : c)
      for (const auto& k : c)
        if (contains_subgraph(a.graph, b.graph) && contains_subgraph(b.graph, k.graph))
          CHECK(contains_subgraph(a.graph, k.graph));
}

TEST_CASE("classification") {
  auto g = preperiodic_graph(parse_map("(5*z^2-7*z+2)/(5*z^2)"), 4).graph;
  auto c = classify(g);
  CHECK(c.kind == Classification::Kind::exact);
  CHECK(c.exact_id == "R3P3");
  CHECK(classify(G("R3P0")).exact_id == "R3P0");
  // R3P3 with an extra fixed point and one preimage of it.
  auto extra = add_cycle_step(G("R3P3"), 1);
  auto ce = classify(extra);
  CHECK(ce.kind == Classification::Kind::admits);
  CHECK_FALSE(ce.admits.empty());
  for (const auto& id : ce.admits) CHECK(contains_subgraph(extra, G(id)));
  // Pure 4-cycle: nothing matches.
  FunctionalGraph cyc4{{1, 2, 3, 0}, {}};
  CHECK(classify(cyc4).kind == Classification::Kind::unknown);
}

TEST_CASE("Hasse closure") {
  auto r = verify_hasse_closure();
  CHECK(r.all_covered());
  for (const auto& c : r.cases) {
    CAPTURE(c.graph_id);
    CAPTURE(c.step);
    CHECK(c.outcome != "UNCOVERED");
  }
  CHECK_FALSE(r.assumptions.empty());
  auto find = [&](const std::string& id, const std::string& step) -> const ClosureCase* {
    for (const auto& c : r.cases)
      if (c.graph_id == id && c.step == step) return &c;
    return nullptr;
  };
  auto r3p1_two = find("R3P1", "add 2-cycle with tails");
  REQUIRE(r3p1_two);
  CHECK(r3p1_two->outcome == "isomorphic to R3P4");
  auto r3p2_fixed = find("R3P2", "add 1-cycle with tails");
  REQUIRE(r3p2_fixed);
  CHECK(r3p2_fixed->outcome.find("N3E1") != std::string::npos);
  // R3P5 leaves at depth three from the cycle get N3H2 or N3H3.
  bool deep_leaf_hit = false;
  for (const auto& c : r.cases)
    if (c.graph_id == "R3P5" && c.step.rfind("add 2 preimages", 0) == 0 &&
        (c.outcome.find("N3H2") != std::string::npos || c.outcome.find("N3H3") != std::string::npos))
      deep_leaf_hit = true;
  CHECK(deep_leaf_hit);
}

TEST_CASE("closure steps outside the diagram are not covered") {
  // A 4-cycle step is not one of the recursion steps; its result on R3P1
  // matches no diagram graph and contains no inadmissible graph.
  FunctionalGraph g = G("R3P1");
  int base = g.size();
  for (int i = 0; i < 4; ++i) g.succ.push_back(base + (i + 1) % 4);
  g.labels.resize(g.succ.size());
  auto c = classify(g);
  CHECK(c.kind == Classification::Kind::unknown);
}

TEST_CASE("graph JSON and DOT") {
  const auto& g = G("R3P1");
  auto j = graph_to_json(g);
  auto back = graph_from_json(j);
  CHECK(back.succ == g.succ);
  CHECK(back.labels == g.labels);
  CHECK_THROWS_AS(graph_from_json(nlohmann::json::parse(R"({"vertices":0,"successor":[]})")), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json(nlohmann::json::parse(R"({"vertices":2,"successor":[0,5]})")), std::invalid_argument);
  auto dot = to_dot(G("R3P0"), "R3P0");
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("∞") != std::string::npos);
  CHECK(std::count(dot.begin(), dot.end(), '>') == 4);
}
