// One line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "preper/app/classify.hpp"
#include "preper/app/survey.hpp"
#include "preper/claims/claims.hpp"
#include "preper/graphcat/catalog.hpp"
#include "preper/p1dyn/parse_map.hpp"

using namespace preper;

namespace {

struct Line {
  bool ok = true;
  std::string note;
};

void add(Line& l, bool ok, const std::string& what) {
  if (!ok) l.ok = false;
  if (!ok) l.note += (l.note.empty() ? "" : "; ") + what;
}

// Runs the named claims; every one must pass.
Line claims(const std::vector<std::string>& ids) {
  Line l;
  for (const auto& id : ids) {
    auto r = verify_claims(id).results.at(0);
    std::string what = id + ": " + r.status + (r.computed.empty() ? "" : " (" + r.computed + ")");
    if (!r.detail.empty()) what += " [" + r.detail + "]";
    add(l, r.status == claim_status::pass, what);
  }
  return l;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Line table_one() {
  Line l;
  const std::vector<std::pair<std::string, int>> want{{"R3P0", 4}, {"R3P1", 5}, {"R3P2", 7},
                                                      {"R3P3", 7}, {"R3P4", 9}, {"R3P5", 11}};
  for (const auto& [id, n] : want) {
    const auto& e = catalog_entry(id);
    auto t0 = std::chrono::steady_clock::now();
    auto c = classify_map(parse_map(e.example_map), 4);
    double dt = seconds_since(t0);
    add(l, c.in_family && c.classification.kind == Classification::Kind::exact && c.classification.exact_id == id,
        id + " classified as " + c.classification.describe());
    add(l, c.graph.graph.size() == n, id + " has " + std::to_string(c.graph.graph.size()) + " vertices");
    std::multiset<std::string> have(c.graph.graph.labels.begin(), c.graph.graph.labels.end());
    std::multiset<std::string> drawn(e.graph.labels.begin(), e.graph.labels.end());
    add(l, have == drawn, id + " vertex set differs");
    add(l, dt < 1.0, id + " took " + std::to_string(dt) + " s");
  }
  return l;
}

Line survey_property() {
  SurveyOptions o;
  o.height = 50;
  o.max_period = 4;
  o.jobs = 4;
  auto s = run_survey(o);
  Line l;
  static const std::set<std::string> allowed{"R3P0", "R3P1", "R3P2", "R3P3", "R3P4", "R3P5"};
  for (const auto& [k, n] : s.histogram) add(l, allowed.count(k) > 0, std::to_string(n) + " maps classified " + k);
  add(l, s.max_vertices <= 11, "max vertex count " + std::to_string(s.max_vertices));
  for (const auto& f : s.findings) add(l, false, "finding: " + f);
  add(l, s.records.size() == s.parameters, "missing records");
  l.note = std::to_string(s.parameters) + " parameters, max " + std::to_string(s.max_vertices) + " vertices" +
           (l.note.empty() ? "" : "; " + l.note);
  return l;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    std::string title;
    double limit;  // seconds
    std::function<Line()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "Table 1 end-to-end", 6, table_one},
      {2, "dynatomic identities", 10,
       [] { return claims({"dyn.phi1", "dyn.phi2", "dyn.phi3", "dyn.p4", "dyn.res12"}); }},
      {3, "discriminant chain", 10, [] { return claims({"dyn.r3p5_chain"}); }},
      {4, "elliptic torsion", 1,
       [] { return claims({"curves.torsion.19a3", "curves.torsion.11a3", "curves.torsion.17a4", "curves.torsion.53a1"}); }},
      {5, "finite-field counts", 60,
       [] {
         return claims({"curves.X3.count_f3", "curves.X3.jacobian_f3", "curves.N3H1.count_f5", "curves.N3H1.jacobian_f5",
                        "curves.N3M1.reductions", "app.D_F5", "app.line"});
       }},
      {6, "rational points and curve maps", 60,
       [] {
         return claims({"curves.points", "curves.map.N3E1.psi", "curves.map.N3E1.psi1", "curves.map.N3E2.psi",
                        "curves.map.N3E3.psi", "curves.map.N3M1.psi", "curves.map.N3M2.psi", "curves.map.N3M3.psi",
                        "curves.map.N3H1.psi", "app.DtoC"});
       }},
      {7, "appendix derivation", 30, [] { return claims({"app.quartic", "app.curve", "app.involution", "app.embedding"}); }},
      {8, "trace map divisibility", 120, [] { return claims({"dyn.trace_p4"}); }},
      {9, "Hasse closure", 60, [] { return claims({"hasse.closure"}); }},
      {10, "survey to height 50", 600, survey_property},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Line l;
    try {
      l = c.run();
    } catch (const std::exception& e) {
      l = {false, std::string("exception: ") + e.what()};
    }
    double dt = seconds_since(t0);
    if (dt > c.limit) add(l, false, "over the " + std::to_string(static_cast<int>(c.limit)) + " s budget");
    if (!l.ok) ++failed;
    std::printf("%s criterion %d (%s) %.2fs%s%s\n", l.ok ? "PASS" : "FAIL", c.number, c.title.c_str(), dt,
                l.note.empty() ? "" : ": ", l.note.c_str());
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
