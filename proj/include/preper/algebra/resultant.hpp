#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "preper/algebra/unipoly.hpp"

namespace preper {

template <class R>
using Matrix = std::vector<std::vector<R>>;

/// Fraction-free (Bareiss) determinant over an integral domain with exact
/// division. Row swaps track the sign.
template <class R>
R determinant(Matrix<R> m) {
  const std::size_t n = m.size();
  if (n == 0) return RingOps<R>::from_int(1);
  bool negate = false;
  R prev = RingOps<R>::from_int(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m[k][k])) {
      std::size_t r = k + 1;
      while (r < n && is_zero(m[r][k])) ++r;
      if (r == n) return R{};
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        R t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        auto q = exact_quotient(t, prev);
        if (!q) throw std::logic_error("Bareiss step not exact");
        m[i][j] = std::move(*q);
      }
      m[i][k] = R{};
    }
    prev = m[k][k];
  }
  R d = m[n - 1][n - 1];
  if (negate) d = R(R{} - d);
  return d;
}

/// Sylvester matrix of p (formal degree m) and q (formal degree n): n rows of
/// p's coefficients above m rows of q's, highest degree first.
template <class R>
Matrix<R> sylvester_matrix(const UniPoly<R>& p, int m, const UniPoly<R>& q, int n) {
  const int size = m + n;
  Matrix<R> s(size, std::vector<R>(size));
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) s[r][r + (m - i)] = p.coeff(i);
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) s[n + r][r + (n - i)] = q.coeff(i);
  return s;
}

/// Res(p, q) as det of the Sylvester matrix with p's rows first. For monic
/// linears this is det [[1,-a],[1,-b]] = a - b.
template <class R>
R resultant(const UniPoly<R>& p, const UniPoly<R>& q) {
  if (p.is_zero() || q.is_zero()) throw std::domain_error("resultant of zero polynomial");
  if (p.degree() == 0 && q.degree() == 0) throw std::domain_error("resultant of two constants");
  return determinant(sylvester_matrix(p, p.degree(), q, q.degree()));
}

/// Resultant with prescribed formal degrees (leading coefficients may vanish).
template <class R>
R resultant(const UniPoly<R>& p, int m, const UniPoly<R>& q, int n) {
  return determinant(sylvester_matrix(p, m, q, n));
}

/// (-1)^(n(n-1)/2) Res(p, p') / lc(p). For a quadratic this is b^2 - 4ac.
template <class R>
R discriminant(const UniPoly<R>& p) {
  const int n = p.degree();
  if (n < 2) throw std::domain_error("discriminant needs degree >= 2");
  R r = resultant(p, p.derivative());
  auto q = exact_quotient(r, p.leading());
  if (!q) throw std::logic_error("discriminant: resultant not divisible by leading coefficient");
  R d = std::move(*q);
  if ((n * (n - 1) / 2) % 2) d = R(R{} - d);
  return d;
}

}  // namespace preper
