#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "preper/curves/model.hpp"

namespace preper {

/// Rational map between models. For projective or weighted targets the
/// coordinates are polynomials and a point is indeterminate when they all
/// vanish; for affine targets they are quotients and a point is undefined
/// when a denominator vanishes.
struct CurveMap {
  std::string name;
  CurveModel source, target;
  std::vector<RatFunc> coords;
  std::vector<QPoint> indeterminacy;  // as recorded
};

/// nullopt when p is indeterminate (or undefined) for m.
std::optional<QPoint> apply(const CurveMap& m, const QPoint& p);

struct MapPointPair {
  QPoint source;
  std::optional<QPoint> image;  // empty: the pair asserts indeterminacy
};

struct MapReport {
  bool ok = true;
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  std::vector<QPoint> indeterminate;             // listed source points where all coordinates vanish
  std::map<std::uint64_t, std::size_t> checked;  // prime -> source points mapped and tested
  std::map<std::uint64_t, std::size_t> skipped;  // prime -> indeterminate source points
};

/// (i) pairs: each source point lies on the source; its image lies on the
/// target and equals the listed image, or the point is indeterminate as
/// listed. (ii) per prime p: every source point over F_p outside the
/// indeterminacy maps onto the target mod p. (iii) the recorded
/// indeterminacy points are on the source and are exactly the listed
/// source points at which the map is indeterminate.
MapReport verify_curve_map(const CurveMap& m, const std::vector<std::uint64_t>& primes,
                           const std::vector<MapPointPair>& pairs);

}  // namespace preper
