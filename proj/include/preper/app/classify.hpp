#pragma once

#include <string>

#include "json.hpp"
#include "preper/graphcat/catalog.hpp"
#include "preper/p1dyn/dynamics.hpp"

namespace preper {

/// parse -> normalise -> graph -> classify for one map.
struct MapClassification {
  QuadRatMap map;
  bool in_family = false;  // has a rational critical point of exact period 3
  NormalForm normal;
  PrePerGraph graph;       // vertex labels are the rational points
  Classification classification;

  /// Periodic points of period >= 3 other than the critical cycle.
  std::vector<PeriodicPoint> extra_long_periodic() const;
  nlohmann::json to_json() const;
  std::string to_text() const;
};

MapClassification classify_map(const QuadRatMap& phi, int max_period = 4);
MapClassification classify_parameter(const Rational& a, int max_period = 4);

}  // namespace preper
