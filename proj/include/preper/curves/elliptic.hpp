#pragma once

#include <optional>
#include <string>

#include "preper/curves/model.hpp"

namespace preper {

/// Affine point or the point at infinity O.
struct ECPoint {
  bool infinity = true;
  Rational x, y;

  static ECPoint at_infinity() { return {}; }
  static ECPoint affine(Rational x, Rational y) { return {false, std::move(x), std::move(y)}; }
  /// From projective [X : Y : Z].
  static ECPoint from_projective(const QPoint& p);
  friend bool operator==(const ECPoint&, const ECPoint&) = default;
  std::string to_string() const;
};

bool on_curve(const EllipticCurveW& e, const ECPoint& p);
ECPoint negate(const EllipticCurveW& e, const ECPoint& p);
ECPoint add(const EllipticCurveW& e, const ECPoint& p, const ECPoint& q);
ECPoint multiply(const EllipticCurveW& e, const ECPoint& p, long n);

/// Mazur: a rational torsion point has order at most 12.
constexpr int kTorsionBound = 12;

struct TorsionOrder {
  std::optional<int> order;  // empty: infinite, certified by kTorsionBound
  std::string to_string() const;
};

/// Throws std::invalid_argument if p is not on e.
TorsionOrder ec_order_of_point(const EllipticCurveW& e, const ECPoint& p);

}  // namespace preper
