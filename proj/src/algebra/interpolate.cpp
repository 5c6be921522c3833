#include "preper/algebra/interpolate.hpp"

#include <stdexcept>

namespace preper {

QPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  const std::size_t n = xs.size();
  if (ys.size() != n) throw std::invalid_argument("interpolate: size mismatch");
  // Newton divided differences, then Horner back to the monomial basis.
  std::vector<Rational> c = ys;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      Rational dx = xs[i] - xs[i - j];
      if (dx.is_zero()) throw std::invalid_argument("interpolate: repeated node");
      c[i] = (c[i] - c[i - 1]) / dx;
    }
  QPoly acc;
  for (std::size_t k = n; k-- > 0;) {
    acc = acc * QPoly(std::vector<Rational>{-xs[k], Rational(1)}) + QPoly::constant(c[k]);
  }
  return acc;
}

}  // namespace preper
