#include "preper/graphcat/graph_io.hpp"

#include <sstream>
#include <stdexcept>

namespace preper {

nlohmann::json graph_to_json(const FunctionalGraph& g) {
  nlohmann::json j;
  j["vertices"] = g.size();
  j["successor"] = g.succ;
  j["labels"] = g.labels.empty() ? std::vector<std::string>(g.succ.size()) : g.labels;
  return j;
}

FunctionalGraph graph_from_json(const nlohmann::json& j) {
  FunctionalGraph g;
  try {
    const int n = j.at("vertices").get<int>();
    g.succ = j.at("successor").get<std::vector<int>>();
    if (j.contains("labels")) g.labels = j.at("labels").get<std::vector<std::string>>();
    if (n <= 0) throw std::invalid_argument("graph has no vertices");
    if (static_cast<int>(g.succ.size()) != n) throw std::invalid_argument("successor list length differs from vertex count");
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed graph JSON: ") + e.what());
  }
  if (!g.valid()) throw std::invalid_argument("successor index out of range");
  return g;
}

std::string to_dot(const FunctionalGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n";
  for (int v = 0; v < g.size(); ++v) {
    std::string label = g.labels.empty() ? "" : g.labels[v];
    if (label == "inf") label = "∞";
    os << "  v" << v << " [label=\"" << label << "\"];\n";
  }
  for (int v = 0; v < g.size(); ++v) os << "  v" << v << " -> v" << g.succ[v] << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace preper
