#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "preper/algebra/unipoly.hpp"

namespace preper {

/// Binary form of fixed degree d stored through its dehomogenisation:
/// coefficient of X^i Y^(d-i) is `poly.coeff(i)`.
template <class R>
struct BinaryForm {
  int degree = 0;
  UniPoly<R> poly;
};

template <class R>
BinaryForm<R> operator*(const BinaryForm<R>& a, const BinaryForm<R>& b) {
  return {a.degree + b.degree, a.poly * b.poly};
}

/// Quadratic map [F : G] with F = f[2] X^2 + f[1] XY + f[0] Y^2.
template <class R>
struct QuadForms {
  std::array<R, 3> f, g;
};

/// (F_n, G_n) for n = 1..count, the homogeneous iterates.
template <class R>
struct HomIteratePair {
  std::vector<BinaryForm<R>> F, G;  // index n - 1
};

template <class R>
HomIteratePair<R> iterate_pair(const QuadForms<R>& m, int count) {
  if (count < 1 || count > 6) throw std::out_of_range("iterate index must be in 1..6");
  HomIteratePair<R> out;
  auto quad = [](const std::array<R, 3>& c) { return BinaryForm<R>{2, UniPoly<R>(std::vector<R>{c[0], c[1], c[2]})}; };
  out.F.push_back(quad(m.f));
  out.G.push_back(quad(m.g));
  for (int n = 1; n < count; ++n) {
    const auto& Fn = out.F.back().poly;
    const auto& Gn = out.G.back().poly;
    const int d = out.F.back().degree;
    auto FF = Fn * Fn, FG = Fn * Gn, GG = Gn * Gn;
    auto comp = [&](const std::array<R, 3>& c) { return BinaryForm<R>{2 * d, FF * c[2] + FG * c[1] + GG * c[0]}; };
    auto Fnext = comp(m.f);
    auto Gnext = comp(m.g);
    out.F.push_back(std::move(Fnext));
    out.G.push_back(std::move(Gnext));
  }
  return out;
}

/// Y F_n - X G_n.
template <class R>
BinaryForm<R> periodic_form(const BinaryForm<R>& F, const BinaryForm<R>& G) {
  return {F.degree + 1, F.poly - G.poly.shift(1)};
}

inline int moebius_mu(int n) {
  int mu = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

template <class R>
struct DynatomicPoly {
  int n = 0;
  BinaryForm<R> form;                          ///< Phi*_n with its formal degree
  std::vector<std::pair<int, int>> factors;    ///< (k, mu(n/k)) for k | n, mu != 0
  const UniPoly<R>& poly() const { return form.poly; }
};

/// Phi*_n as the Moebius product of the Phi_k, by exact division.
template <class R>
DynatomicPoly<R> dynatomic_star(const QuadForms<R>& m, int n) {
  if (n < 1 || n > 6) throw std::out_of_range("dynatomic index must be in 1..6");
  auto it = iterate_pair(m, n);
  DynatomicPoly<R> out;
  out.n = n;
  BinaryForm<R> num{0, UniPoly<R>::constant(RingOps<R>::from_int(1))};
  BinaryForm<R> den = num;
  for (int k = 1; k <= n; ++k) {
    if (n % k) continue;
    const int mu = moebius_mu(n / k);
    if (mu == 0) continue;
    out.factors.emplace_back(k, mu);
    auto phi = periodic_form(it.F[k - 1], it.G[k - 1]);
    if (mu > 0) {
      num = num * phi;
    } else {
      den = den * phi;
    }
  }
  auto q = exact_quotient(num.poly, den.poly);
  if (!q) throw std::logic_error("Moebius product for Phi*_" + std::to_string(n) + " is not exact");
  out.form = {num.degree - den.degree, std::move(*q)};
  return out;
}

/// Phi_n = Y F_n - X G_n for the given map.
template <class R>
BinaryForm<R> dynatomic_full(const QuadForms<R>& m, int n) {
  auto it = iterate_pair(m, n);
  return periodic_form(it.F[n - 1], it.G[n - 1]);
}

}  // namespace preper
