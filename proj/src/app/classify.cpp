#include "preper/app/classify.hpp"

#include <algorithm>
#include <sstream>

#include "preper/graphcat/graph_io.hpp"

namespace preper {

std::vector<PeriodicPoint> MapClassification::extra_long_periodic() const {
  std::vector<PeriodicPoint> out;
  if (!in_family) return out;
  // The critical cycle, mapped back from 0 -> inf -> 1 through the conjugator.
  std::vector<ProjPoint> crit;
  for (const auto& p : {ProjPoint(0, 1), ProjPoint::infinity(), ProjPoint(1, 1)}) crit.push_back(normal.conjugator.apply(p));
  for (const auto& p : graph.periodic)
    if (p.period >= 3 && std::find(crit.begin(), crit.end(), p.point) == crit.end()) out.push_back(p);
  return out;
}

MapClassification classify_map(const QuadRatMap& phi, int max_period) {
  MapClassification out{phi, false, {}, {}, {}};
  out.normal = normalize_to_phi_a(phi);
  if (out.normal.kind == NormalForm::Kind::none) return out;
  out.in_family = true;
  out.graph = preperiodic_graph(phi, max_period);
  out.graph.graph.labels.clear();
  for (const auto& p : out.graph.points) out.graph.graph.labels.push_back(p.to_string());
  out.classification = classify(out.graph.graph);
  return out;
}

MapClassification classify_parameter(const Rational& a, int max_period) { return classify_map(phi_a(a), max_period); }

nlohmann::json MapClassification::to_json() const {
  nlohmann::json j;
  j["map"] = map.to_string();
  if (!in_family) {
    j["status"] = "outside family";
    j["reason"] = "no rational critical point of exact period 3";
    return j;
  }
  j["status"] = "ok";
  if (normal.kind == NormalForm::Kind::parameter)
    j["a"] = normal.a.to_string();
  else
    j["a"] = nullptr;
  j["classification"] = classification.describe();
  j["vertices"] = graph.graph.size();
  nlohmann::json per = nlohmann::json::array();
  for (const auto& p : graph.periodic) per.push_back({{"point", p.point.to_string()}, {"period", p.period}});
  j["periodic"] = per;
  j["graph"] = graph_to_json(graph.graph);
  return j;
}

std::string MapClassification::to_text() const {
  std::ostringstream os;
  os << "map: " << map.to_string() << "\n";
  if (!in_family) {
    os << "status: outside family (no rational critical point of exact period 3)\n";
    return os.str();
  }
  if (normal.kind == NormalForm::Kind::parameter) os << "a: " << normal.a.to_string() << "\n";
  else os << "a: none (both critical points on the 3-cycle)\n";
  os << "classification: " << classification.describe() << "\n";
  os << "vertices: " << graph.graph.size() << "\n";
  os << "edges:";
  for (int v = 0; v < graph.graph.size(); ++v)
    os << (v ? ", " : " ") << graph.points[v].to_string() << " -> " << graph.points[graph.graph.succ[v]].to_string();
  os << "\n";
  return os.str();
}

}  // namespace preper
