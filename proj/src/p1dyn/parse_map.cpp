#include "preper/p1dyn/parse_map.hpp"

#include "preper/algebra/mpoly.hpp"
#include "preper/algebra/parser.hpp"

namespace preper {

QuadRatMap parse_map(std::string_view text) {
  RatFunc r = parse_expression(text, {"z"});
  QPoly num = to_qpoly(r.num, 0);
  QPoly den = to_qpoly(r.den, 0);
  if (num.is_zero()) throw MapError("constant map");
  QPoly g = gcd(num, den);
  num = *exact_quotient(num, g);
  den = *exact_quotient(den, g);
  const int deg = std::max(num.degree(), den.degree());
  if (deg > 2) throw MapError("degree > 2");
  if (deg < 2) throw MapError("degree < 2");
  std::array<Rational, 3> f, g2;
  for (int i = 0; i < 3; ++i) {
    f[i] = num.coeff(i);
    g2[i] = den.coeff(i);
  }
  return QuadRatMap(f, g2);
}

}  // namespace preper
