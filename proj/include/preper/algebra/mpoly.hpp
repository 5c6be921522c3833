#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "preper/algebra/rational.hpp"
#include "preper/algebra/unipoly.hpp"

namespace preper {

/// Exponent vector with trailing zeros trimmed, so that the plain vector
/// ordering is lex order on the padded vectors.
using Exponent = std::vector<std::uint32_t>;

/// Sparse polynomial over Q in variables x0, x1, ... (the number of variables
/// is implicit). No zero coefficients are stored.
class MPoly {
 public:
  MPoly() = default;
  MPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  MPoly(I c) : MPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static MPoly variable(std::size_t i);
  static MPoly monomial(Exponent e, const Rational& c);

  const std::map<Exponent, Rational>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  Rational coeff(const Exponent& e) const;
  /// Lex-leading term; the polynomial must be nonzero.
  const std::pair<const Exponent, Rational>& leading_term() const { return *t_.rbegin(); }

  /// Highest variable index + 1 that occurs.
  std::size_t nvars() const;
  int degree_in(std::size_t var) const;
  int total_degree() const;
  bool is_homogeneous() const;

  void add_term(Exponent e, const Rational& c);

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a);
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.t_ == b.t_; }

  Rational evaluate(const std::vector<Rational>& x) const;
  MPoly derivative(std::size_t var) const;
  /// Replaces variable i by vals[i] for every i < vals.size().
  MPoly compose(const std::vector<MPoly>& vals) const;
  /// Replaces a single variable.
  MPoly substitute(std::size_t var, const MPoly& value) const;
  /// Multiplies each term by x_var^(d - deg term), d = total degree.
  MPoly homogenize(std::size_t var) const;
  /// Clears denominators and removes the integer content; positive lex-leading coefficient.
  MPoly primitive() const;

 private:
  std::map<Exponent, Rational> t_;
};

MPoly pow(const MPoly& base, unsigned e);
inline bool is_zero(const MPoly& p) { return p.is_zero(); }
/// a / b when b divides a exactly (division by lex-leading terms).
std::optional<MPoly> exact_quotient(const MPoly& a, const MPoly& b);

std::string to_string(const MPoly& p, const std::vector<std::string>& names);

/// Views p as a polynomial in variable `var` over Q (p must involve no other variable).
QPoly to_qpoly(const MPoly& p, std::size_t var);
MPoly from_qpoly(const QPoly& p, std::size_t var);
/// p in variables outer/inner as Q[inner][outer].
QQPoly to_qqpoly(const MPoly& p, std::size_t outer, std::size_t inner);
MPoly from_qqpoly(const QQPoly& p, std::size_t outer, std::size_t inner);
/// p as a polynomial in `var` with MPoly coefficients.
UniPoly<MPoly> to_univariate(const MPoly& p, std::size_t var);
MPoly from_univariate(const UniPoly<MPoly>& p, std::size_t var);

/// Quotient of two polynomials; no cancellation is attempted.
struct RatFunc {
  MPoly num;
  MPoly den = MPoly(1);

  RatFunc() = default;
  RatFunc(MPoly n) : num(std::move(n)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(MPoly n, MPoly d);

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a);
  bool is_polynomial() const { return den.is_constant(); }
  /// The numerator divided by a constant denominator.
  MPoly as_polynomial() const;
};

RatFunc pow(const RatFunc& base, int e);

/// Substitutes rational functions for variables: result numerator is the
/// homogenised sum, denominator the product of den_i^(deg_i p).
RatFunc substitute(const MPoly& p, const std::vector<RatFunc>& vals);

}  // namespace preper
