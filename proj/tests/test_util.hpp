#pragma once

#include <random>
#include <string>

#include "preper/algebra/mpoly.hpp"
#include "preper/algebra/parser.hpp"

namespace testutil {

inline preper::QPoly qpoly(const std::string& text, const std::string& var = "x") {
  return preper::to_qpoly(preper::parse_polynomial(text, {var}), 0);
}

/// Q[a][z] from text in z and a.
inline preper::QQPoly qqpoly(const std::string& text, const std::string& outer = "z",
                             const std::string& inner = "a") {
  return preper::to_qqpoly(preper::parse_polynomial(text, {outer, inner}), 0, 1);
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240917);
  return gen;
}

inline long rand_int(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline preper::QPoly random_qpoly(int degree, long bound) {
  std::vector<preper::Rational> c(degree + 1);
  for (auto& x : c) x = preper::Rational(rand_int(-bound, bound));
  if (c.back().is_zero()) c.back() = 1;
  return preper::QPoly(c);
}

}  // namespace testutil
