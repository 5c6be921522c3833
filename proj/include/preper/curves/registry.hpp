#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "preper/curves/curve_map.hpp"
#include "preper/curves/elliptic.hpp"
#include "preper/curves/model.hpp"

namespace preper {

/// One transcribed curve with its listed rational points (in the
/// coordinates of `model`).
struct CurveEntry {
  std::string id;
  CurveModel model;
  std::vector<QPoint> points;
  std::optional<PlaneCurveModel> plane;
  std::optional<HyperellipticModel> hyperelliptic;
  std::optional<EllipticCurveW> elliptic;
  std::optional<SpaceCurveModel> space;
  std::vector<std::pair<QPoly, QPoly>> mumford;  // (u, v) pairs on the Jacobian
  std::vector<QPoint> points_f5;                 // listed F_5 points, as integers
};

struct MapEntry {
  CurveMap map;
  bool indeterminacy_stated = false;
  bool derived = false;  // not displayed by the source; found here
  std::vector<MapPointPair> pairs;
  std::vector<std::uint64_t> primes;
};

struct CurveRegistry {
  std::vector<CurveEntry> curves;
  std::vector<MapEntry> maps;

  const CurveEntry& curve(const std::string& id) const;
  const MapEntry& map(const std::string& id) const;
};

/// Parsed from the embedded curve table once.
const CurveRegistry& curve_registry();

/// Source points of a map entry with their expected images: the explicit
/// pairs when present; otherwise every listed source point, each required
/// to be indeterminate (if recorded) or to map into the target's list.
struct MapCheck {
  MapReport report;
  std::vector<std::string> unlisted_images;  // images outside the target's listed points
  bool ok() const { return report.ok && unlisted_images.empty(); }
};
MapCheck check_map_entry(const CurveRegistry& reg, const MapEntry& m);

}  // namespace preper
