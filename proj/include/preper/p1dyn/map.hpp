#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "preper/algebra/rational.hpp"
#include "preper/dynatomic/dynatomic.hpp"

namespace preper {

/// Point of P^1(Q) as a coprime integer pair with y > 0, or (1, 0) for infinity.
class ProjPoint {
 public:
  ProjPoint() : x_(0), y_(1) {}
  ProjPoint(Integer x, Integer y);
  static ProjPoint infinity() { return ProjPoint(1, 0); }
  static ProjPoint from_rational(const Rational& r) { return ProjPoint(r.num(), r.den()); }
  /// Accepts "inf", "oo", "∞" or a rational literal.
  static ProjPoint parse(const std::string& s);

  const Integer& x() const { return x_; }
  const Integer& y() const { return y_; }
  bool is_infinity() const { return y_ == 0; }
  Rational affine() const;
  /// Rational literal, or "inf".
  std::string to_string() const;

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.x_ == b.x_ && a.y_ == b.y_; }
  /// Order by value with infinity last.
  friend std::strong_ordering operator<=>(const ProjPoint& a, const ProjPoint& b);

 private:
  Integer x_, y_;
};

/// Set of rational roots of a binary quadratic A X^2 + B XY + C Y^2.
struct QuadraticRoots {
  std::vector<ProjPoint> points;  ///< distinct, sorted
  bool double_root = false;
  /// Discriminant B^2 - 4AC when it is not a rational square.
  std::optional<Integer> irrational_discriminant;
};

/// Throws std::domain_error when A = B = C = 0.
QuadraticRoots binary_quadratic_roots(const Integer& A, const Integer& B, const Integer& C);

/// z -> (a z + b) / (c z + d), stored as a primitive integer matrix.
struct Moebius {
  Integer a = 1, b = 0, c = 0, d = 1;

  static Moebius make(const Rational& a, const Rational& b, const Rational& c, const Rational& d);
  static Moebius identity() { return {}; }
  /// z -> z + t.
  static Moebius translation(const Rational& t) { return make(1, t, 0, 1); }
  Integer determinant() const { return a * d - b * c; }
  Moebius inverse() const;
  ProjPoint apply(const ProjPoint& p) const;
  friend bool operator==(const Moebius&, const Moebius&) = default;
};

/// Composition (f o g)(z) = f(g(z)).
Moebius compose(const Moebius& f, const Moebius& g);

/// Degree-2 endomorphism [F : G] of P^1 with integer coefficients, primitive,
/// and with the first nonzero of (g2, g1, g0, f2, f1, f0) positive.
class QuadRatMap {
 public:
  /// f = {f0, f1, f2}: F = f2 X^2 + f1 XY + f0 Y^2; same for g. Throws
  /// std::domain_error when Res(F, G) = 0.
  QuadRatMap(const std::array<Rational, 3>& f, const std::array<Rational, 3>& g);

  const std::array<Integer, 3>& f() const { return f_; }
  const std::array<Integer, 3>& g() const { return g_; }
  Integer resultant() const;
  QuadForms<Rational> forms() const;

  ProjPoint apply(const ProjPoint& p) const;
  /// "(2*z^2 - z - 1)/(2*z^2)".
  std::string to_string() const;

  friend bool operator==(const QuadRatMap&, const QuadRatMap&) = default;

 private:
  std::array<Integer, 3> f_, g_;
};

/// Res(F, G) for binary quadratics.
Integer quadratic_resultant(const std::array<Integer, 3>& f, const std::array<Integer, 3>& g);

/// f^-1 o phi o f.
QuadRatMap conjugate(const QuadRatMap& phi, const Moebius& f);

}  // namespace preper
