#pragma once

#include <optional>
#include <vector>

#include "preper/graphcat/functional_graph.hpp"
#include "preper/p1dyn/map.hpp"

namespace preper {

struct OrbitInfo {
  std::vector<ProjPoint> tail;
  std::vector<ProjPoint> cycle;
  int period() const { return static_cast<int>(cycle.size()); }
  int preperiod() const { return static_cast<int>(tail.size()); }
};

/// Forward orbit until the first repetition; nullopt when more than
/// `max_steps` distinct points are visited.
std::optional<OrbitInfo> orbit(const QuadRatMap& phi, const ProjPoint& p, int max_steps);

struct CriticalPoints {
  std::vector<ProjPoint> rational;  ///< distinct rational critical points
  /// Discriminant of the Jacobian quadratic when the pair is irrational.
  std::optional<Integer> irrational_discriminant;
  /// (A, B, C) of the Jacobian form A X^2 + B XY + C Y^2 (halved).
  std::array<Integer, 3> jacobian;
};

/// Roots of F_X G_Y - F_Y G_X.
CriticalPoints critical_points(const QuadRatMap& phi);

/// Distinct rational Q with phi(Q) = P; `double_root` when P is a critical value.
QuadraticRoots rational_preimages(const QuadRatMap& phi, const ProjPoint& p);

struct PeriodicPoint {
  ProjPoint point;
  int period;
};

/// Rational periodic points of exact period n <= max_period, sorted by
/// (period, point). Candidates come from rational roots of Phi*_n; infinity is
/// checked by iteration.
std::vector<PeriodicPoint> periodic_points(const QuadRatMap& phi, int max_period);

struct PrePerGraph {
  FunctionalGraph graph;
  std::vector<ProjPoint> points;  ///< vertex i carries points[i]
  std::vector<PeriodicPoint> periodic;
};

/// Closure of the periodic points under rational preimages.
PrePerGraph preperiodic_graph(const QuadRatMap& phi, int max_period, int vertex_cap = 256);

struct NormalForm {
  enum class Kind { parameter, pcf, none } kind = Kind::none;
  Rational a;          ///< for Kind::parameter
  Moebius conjugator;  ///< conjugate(phi, conjugator) is phi_a (or 1/(z-1)^2 shape for PCF)
};

/// Moves a rational periodic critical point of exact period 3 to 0 with
/// orbit 0 -> inf -> 1 -> 0 and reads off a.
NormalForm normalize_to_phi_a(const QuadRatMap& phi);

/// (a+1)X^2 - aXY - Y^2 over (a+1)X^2.
QuadRatMap phi_a(const Rational& a);

}  // namespace preper
