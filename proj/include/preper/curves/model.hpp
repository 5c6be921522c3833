#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "preper/algebra/finite_field.hpp"
#include "preper/algebra/mpoly.hpp"
#include "preper/algebra/unipoly.hpp"

namespace preper {

/// Where the coordinates of a CurveModel live. Weighted means the
/// hyperelliptic plane P(1, w, 1) with coordinates (X, Y, Z), Y of weight w.
enum class Ambient { affine, projective, weighted };

using QPoint = std::vector<Rational>;
using FPoint = std::vector<FFElem>;

/// A curve given by equations in one ambient space. All the typed models
/// below convert to this; point sets, reduction and maps work on it.
struct CurveModel {
  std::string name;
  Ambient ambient = Ambient::affine;
  std::vector<std::string> vars;
  std::vector<MPoly> equations;
  unsigned y_weight = 1;  // weighted only
  std::optional<int> genus;

  std::size_t dimension() const { return vars.size(); }
  /// Coordinate weights (all 1 outside the weighted case).
  std::vector<unsigned> weights() const;
};

/// Affine plane curve f(x, y) = 0, kept primitive, with its closure in P^2.
struct PlaneCurveModel {
  std::string name;
  std::vector<std::string> vars;  // two names
  MPoly equation;
  std::optional<int> genus;

  PlaneCurveModel(std::string name, std::vector<std::string> vars, const MPoly& eq, std::optional<int> genus = {});
  CurveModel affine() const;
  /// Homogenised with a third coordinate appended: [x : y : z].
  CurveModel projective() const;
};

/// y^2 = f(x) with 3 <= deg f <= 8; genus ceil(deg f / 2) - 1.
struct HyperellipticModel {
  std::string name;
  QPoly f;

  HyperellipticModel(std::string name, QPoly f);
  int genus() const { return (f.degree() + 1) / 2 - 1; }
  /// Y^2 = F(X, Z), F homogenised to degree 2g + 2, in P(1, g+1, 1).
  CurveModel model() const;
};

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
struct EllipticCurveW {
  std::string name;
  Rational a1, a2, a3, a4, a6;

  EllipticCurveW(std::string name, Rational a1, Rational a2, Rational a3, Rational a4, Rational a6);
  Rational discriminant() const;
  /// Projective closure in P^2, coordinates [x : y : z].
  CurveModel model() const;
};

/// Intersection of hypersurfaces in A^n or P^(n-1).
struct SpaceCurveModel {
  std::string name;
  std::vector<std::string> vars;
  std::vector<MPoly> equations;
  bool projective = true;
  std::optional<int> genus;

  CurveModel model() const;
};

/// Throws std::invalid_argument on a coordinate count mismatch or the zero
/// vector in a projective setting.
bool on_curve(const CurveModel& c, const QPoint& p);
bool on_curve(const CurveModel& c, const FPoint& p, const FiniteField& k);

/// Canonical representative: affine points unchanged; projective and weighted
/// points scaled so the last nonzero of (Z, X) [weighted] or the last nonzero
/// coordinate [projective] is 1.
QPoint normalize(const CurveModel& c, const QPoint& p);
FPoint normalize(const CurveModel& c, const FPoint& p, const FiniteField& k);
bool same_point(const CurveModel& c, const QPoint& a, const QPoint& b);

/// Reduction mod p of a rational point. Projective and weighted points are
/// first scaled to coprime integers, so denominators never obstruct; an
/// affine point whose denominators p divides has no reduction.
std::optional<FPoint> reduce_point(const CurveModel& c, const QPoint& p, const FiniteField& k);

std::string point_to_string(const QPoint& p, Ambient a);
std::string point_to_string(const FPoint& p, Ambient a, const FiniteField& k);
QPoint parse_point(const std::vector<std::string>& coords);

/// MPoly with coefficients reduced into F_q, for fast evaluation.
class FqPoly {
 public:
  /// Throws std::domain_error if p divides a coefficient denominator.
  FqPoly(const MPoly& p, const FiniteField& k);
  FFElem operator()(const FPoint& x) const;

 private:
  const FiniteField* k_;
  std::vector<std::pair<Exponent, FFElem>> terms_;
};

}  // namespace preper
