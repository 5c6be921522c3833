#pragma once

#include <algorithm>
#include <cassert>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "preper/algebra/rational.hpp"

namespace preper {

template <class R>
class UniPoly;

namespace detail {
template <class T>
bool coeff_is_zero(const T& x) {
  return is_zero(x);
}
}  // namespace detail

/// Integer embedding Z -> R for the coefficient rings used here.
template <class R>
struct RingOps {
  static R from_int(long v) { return R(v); }
};
template <class S>
struct RingOps<UniPoly<S>> {
  static UniPoly<S> from_int(long v) { return UniPoly<S>::constant(RingOps<S>::from_int(v)); }
};

/// Dense univariate polynomial over a commutative ring R. Coefficients are
/// stored lowest degree first; the leading coefficient is never zero, and the
/// zero polynomial has no coefficients. Nesting (UniPoly<UniPoly<Rational>>)
/// gives Q[a][z] with z the outer variable.
template <class R>
class UniPoly {
 public:
  using coefficient_type = R;

  UniPoly() = default;
  explicit UniPoly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UniPoly constant(R c) { return UniPoly(std::vector<R>{std::move(c)}); }
  static UniPoly monomial(R c, std::size_t deg) {
    std::vector<R> v(deg + 1);
    v[deg] = std::move(c);
    return UniPoly(std::move(v));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<R>& coeffs() const { return c_; }

  /// Coefficient of x^i; zero beyond the degree.
  R coeff(std::size_t i) const { return i < c_.size() ? c_[i] : R{}; }
  const R& leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  UniPoly& operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  UniPoly& operator*=(const R& s) {
    for (auto& x : c_) x *= s;
    trim();
    return *this;
  }

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator-(UniPoly a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend UniPoly operator*(UniPoly a, const R& s) { return a *= s; }
  friend UniPoly operator*(const R& s, UniPoly a) { return a *= s; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<R> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (detail::coeff_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(out));
  }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  /// Horner evaluation; V must be closed under V*X and V+R.
  template <class X>
  auto evaluate(const X& x) const {
    using V = decltype(std::declval<R>() * x);
    V acc{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  UniPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<R> out(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * RingOps<R>::from_int(static_cast<long>(i));
    return UniPoly(std::move(out));
  }

  /// Applies f to every coefficient.
  template <class F>
  auto map(F&& f) const {
    using S = std::decay_t<decltype(f(std::declval<const R&>()))>;
    std::vector<S> out;
    out.reserve(c_.size());
    for (const auto& x : c_) out.push_back(f(x));
    return UniPoly<S>(std::move(out));
  }

  /// Multiplies by x^k.
  UniPoly shift(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<R> out(k);
    out.insert(out.end(), c_.begin(), c_.end());
    return UniPoly(std::move(out));
  }

 private:
  void trim() {
    while (!c_.empty() && detail::coeff_is_zero(c_.back())) c_.pop_back();
  }

  std::vector<R> c_;
};

template <class R>
bool is_zero(const UniPoly<R>& p) {
  return p.is_zero();
}

template <class R>
UniPoly<R> pow(const UniPoly<R>& base, unsigned e) {
  UniPoly<R> result = UniPoly<R>::constant(RingOps<R>::from_int(1));
  UniPoly<R> b = base;
  while (e) {
    if (e & 1U) result = result * b;
    e >>= 1U;
    if (e) b = b * b;
  }
  return result;
}

/// Exact quotient a / b when b divides a in R[x]; requires exact division in R.
template <class R>
std::optional<UniPoly<R>> exact_quotient(const UniPoly<R>& a, const UniPoly<R>& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return UniPoly<R>{};
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<R> rem = a.coeffs();
  std::vector<R> q(a.degree() - b.degree() + 1);
  const R& lb = b.leading();
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    if (is_zero(rem[i])) continue;
    auto qi = exact_quotient(rem[i], lb);
    if (!qi) return std::nullopt;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= *qi * b.coeffs()[j];
    q[i - db] = std::move(*qi);
  }
  for (int i = 0; i < db; ++i) {
    if (!is_zero(rem[i])) return std::nullopt;
  }
  return UniPoly<R>(std::move(q));
}

/// Euclidean division over a field: a = q*b + r with deg r < deg b.
template <class R>
std::pair<UniPoly<R>, UniPoly<R>> divmod(const UniPoly<R>& a, const UniPoly<R>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {UniPoly<R>{}, a};
  std::vector<R> rem = a.coeffs();
  std::vector<R> q(a.degree() - b.degree() + 1);
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    if (is_zero(rem[i])) continue;
    R qi = rem[i] / b.leading();
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= qi * b.coeffs()[j];
    q[i - db] = std::move(qi);
  }
  rem.resize(db);
  return {UniPoly<R>(std::move(q)), UniPoly<R>(std::move(rem))};
}

/// lc(b)^(deg a - deg b + 1) * a mod b, computed without division in R.
template <class R>
UniPoly<R> pseudo_remainder(const UniPoly<R>& a, const UniPoly<R>& b) {
  if (b.is_zero()) throw std::domain_error("pseudo-remainder by zero");
  if (a.degree() < b.degree()) return a;
  std::vector<R> rem = a.coeffs();
  const int db = b.degree();
  const R& lb = b.leading();
  for (int i = a.degree(); i >= db; --i) {
    R top = rem[i];
    for (int k = 0; k < i; ++k) rem[k] *= lb;
    rem[i] = R{};
    for (int j = 0; j < db; ++j) rem[i - db + j] -= top * b.coeffs()[j];
  }
  return UniPoly<R>(std::vector<R>(rem.begin(), rem.begin() + db));
}

template <class R>
UniPoly<R> make_monic(const UniPoly<R>& p) {
  if (p.is_zero()) return p;
  R inv = R(1) / p.leading();
  return p * inv;
}

/// Monic gcd over a field.
template <class R>
UniPoly<R> gcd(UniPoly<R> a, UniPoly<R> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

/// Substitutes x -> x + shift.
template <class R>
UniPoly<R> taylor_shift(const UniPoly<R>& p, const R& shift) {
  UniPoly<R> lin(std::vector<R>{shift, RingOps<R>::from_int(1)});
  UniPoly<R> acc;
  for (int i = p.degree(); i >= 0; --i) acc = acc * lin + UniPoly<R>::constant(p.coeffs()[i]);
  return acc;
}

/// Reverses the coefficient list with respect to a formal degree n:
/// x^n p(1/x).
template <class R>
UniPoly<R> reversed(const UniPoly<R>& p, int n) {
  std::vector<R> out(n + 1);
  for (int i = 0; i <= p.degree(); ++i) out[n - i] = p.coeffs()[i];
  return UniPoly<R>(std::move(out));
}

using QPoly = UniPoly<Rational>;    ///< Q[x]
using QQPoly = UniPoly<QPoly>;      ///< Q[a][x]

std::string to_string(const QPoly& p, const std::string& var = "x");
/// Decreasing outer degree, inner coefficients parenthesised.
std::string to_string(const QQPoly& p, const std::string& outer, const std::string& inner);

/// Content of a polynomial over Q[a]: monic gcd of its coefficients, scaled
/// so that content * primitive part reproduces p exactly.
QPoly content(const QQPoly& p);
QQPoly primitive_part(const QQPoly& p);

/// gcd in Q(a)[z], returned primitive over Q[a] with integer-normalised
/// content. Uses a primitive pseudo-remainder sequence.
QQPoly gcd(const QQPoly& a, const QQPoly& b);

/// Scales a Q[x] polynomial to a primitive integer polynomial with positive
/// leading coefficient.
QPoly primitive_integer(const QPoly& p);

/// Substitutes a constant for the inner variable of Q[a][z].
QPoly specialize_inner(const QQPoly& p, const Rational& value);

/// Swaps inner and outer variables: Q[a][z] -> Q[z][a].
QQPoly swap_variables(const QQPoly& p);

}  // namespace preper
