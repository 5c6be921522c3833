#include "preper/dynatomic/trace_map.hpp"

#include <stdexcept>

#include "preper/algebra/interpolate.hpp"
#include "preper/algebra/resultant.hpp"
#include "preper/dynatomic/dynatomic.hpp"
#include "preper/dynatomic/families.hpp"

namespace preper {

namespace {

const QPoly kAPlusOne(std::vector<Rational>{1, 1});

QQPoly divide_coefficients(const QQPoly& p, const QPoly& c) {
  std::vector<QPoly> out;
  for (const auto& x : p.coeffs()) {
    auto q = exact_quotient(x, c);
    if (!q) throw std::logic_error("coefficient not divisible");
    out.push_back(std::move(*q));
  }
  return QQPoly(std::move(out));
}

QQPoly exact(const QQPoly& a, const QQPoly& b, const char* what) {
  auto q = exact_quotient(a, b);
  if (!q) throw std::logic_error(what);
  return *q;
}

// Integer table c[j][k] of z^j a^k for scale * p.
struct IntTable {
  std::vector<std::vector<Integer>> c;
  Rational scale;
};

Integer denominator_lcm(const QQPoly& p, Integer l = 1) {
  for (const auto& x : p.coeffs())
    for (const auto& y : x.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), y.den().get_mpz_t());
  return l;
}

IntTable integer_table(const QQPoly& p, const Rational& scale) {
  IntTable t;
  t.scale = scale;
  for (const auto& x : p.coeffs()) {
    std::vector<Integer> row;
    for (const auto& y : x.coeffs()) row.push_back((y * scale).num());
    t.c.push_back(std::move(row));
  }
  return t;
}

Integer eval_row(const std::vector<Integer>& row, long a) {
  Integer acc = 0;
  for (auto it = row.rbegin(); it != row.rend(); ++it) acc = acc * a + *it;
  return acc;
}

int inner_degree(const QQPoly& p) {
  int d = 0;
  for (const auto& x : p.coeffs()) d = std::max(d, x.degree());
  return d;
}

struct GridInputs {
  IntTable p4, num, den;
  int m, n;  // formal z-degrees of P_4 and of den t - num
};

GridInputs grid_inputs(const TraceMapData& d) {
  // num and den share one scale so that t keeps its meaning.
  Rational e(denominator_lcm(d.den, denominator_lcm(d.num)));
  return {integer_table(d.p4, Rational(denominator_lcm(d.p4))), integer_table(d.num, e), integer_table(d.den, e),
          d.p4.degree(), std::max(d.num.degree(), d.den.degree())};
}

Integer sample(const GridInputs& g, long a, long t) {
  UniPoly<Integer> p, q;
  {
    std::vector<Integer> c;
    for (const auto& row : g.p4.c) c.push_back(eval_row(row, a));
    p = UniPoly<Integer>(std::move(c));
  }
  {
    std::vector<Integer> c(g.n + 1);
    for (int j = 0; j <= g.n; ++j) {
      Integer nv = j < static_cast<int>(g.num.c.size()) ? eval_row(g.num.c[j], a) : Integer(0);
      Integer dv = j < static_cast<int>(g.den.c.size()) ? eval_row(g.den.c[j], a) : Integer(0);
      c[j] = dv * t - nv;
    }
    q = UniPoly<Integer>(std::move(c));
  }
  return determinant(sylvester_matrix(p, g.m, q, g.n));
}

}  // namespace

QQPoly reduced_p3() {
  auto phi3 = family_dynatomic(family('A'), 3).poly();
  // (a+1)^2 z (z-1); a single (a+1) leaves content a+1 behind.
  const QPoly sq = kAPlusOne * kAPlusOne;
  QQPoly factor(std::vector<QPoly>{QPoly{}, -sq, sq});
  return exact(phi3, factor, "Phi*_{a,3} not divisible by (a+1)^2 z(z-1)");
}

QQPoly reduced_p4() {
  auto phi4 = family_dynatomic(family('A'), 4).poly();
  try {
    return divide_coefficients(phi4, pow(kAPlusOne, 4));
  } catch (const std::logic_error&) {
    throw std::logic_error("Phi*_{a,4} not divisible by (a+1)^4");
  }
}

namespace {

// Certifies that p and q share no factor of positive z-degree by finding a
// specialisation a = v, with both leading coefficients nonzero, at which the
// univariate gcd is constant.
bool coprime_in_z(const QQPoly& p, const QQPoly& q) {
  for (long v : {2L, 3L, 5L, 7L, 11L, 13L}) {
    if (p.leading().evaluate(Rational(v)).is_zero() || q.leading().evaluate(Rational(v)).is_zero()) continue;
    if (gcd(specialize_inner(p, v), specialize_inner(q, v)).degree() == 0) return true;
  }
  return false;
}

// gcd over Q[a][z] with the z-part settled by specialisation when possible.
QQPoly fast_gcd(const QQPoly& p, const QQPoly& q) {
  if (!coprime_in_z(primitive_part(p), primitive_part(q))) return gcd(p, q);
  return QQPoly::constant(gcd(content(p), content(q)));
}

}  // namespace

TraceMapData trace_map_data() {
  TraceMapData d;
  d.p4 = reduced_p4();
  auto it = iterate_pair(family('A').forms, 3);
  const QQPoly z = QQPoly::monomial(QPoly::constant(1), 1);
  QQPoly lcm = QQPoly::constant(QPoly::constant(1));
  for (const auto& G : it.G) {
    QQPoly g = fast_gcd(lcm, G.poly);
    lcm = exact(lcm * G.poly, g, "lcm step");
  }
  QQPoly num = z * lcm;
  for (std::size_t i = 0; i < it.F.size(); ++i) num = num + it.F[i].poly * exact(lcm, it.G[i].poly, "lcm cofactor");
  QQPoly g = fast_gcd(num, lcm);
  d.num = exact(num, g, "trace numerator");
  d.den = exact(lcm, g, "trace denominator");
  return d;
}

std::vector<Integer> resultant_grid(const TraceMapData& d, const std::vector<long>& as, const std::vector<long>& ts,
                                    Kernel kernel) {
  const GridInputs g = grid_inputs(d);
  const long na = static_cast<long>(as.size()), nt = static_cast<long>(ts.size());
  std::vector<Integer> out(static_cast<std::size_t>(na * nt));
  if (kernel == Kernel::serial) {
    for (long i = 0; i < na; ++i)
      for (long j = 0; j < nt; ++j) out[i * nt + j] = sample(g, as[i], ts[j]);
  } else {
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < na * nt; ++k) out[k] = sample(g, as[k / nt], ts[k % nt]);
  }
  return out;
}

TraceMapResult trace_map_quotient(const MPoly& factor, Kernel kernel) {
  TraceMapResult r;
  r.data = trace_map_data();
  const GridInputs g = grid_inputs(r.data);
  // Degree bounds from the Sylvester rows: n rows of P_4, m rows of den t - num.
  r.degree_bound_t = g.m;
  r.degree_bound_a = g.n * inner_degree(r.data.p4) + g.m * std::max(inner_degree(r.data.num), inner_degree(r.data.den));
  std::vector<long> as, ts;
  for (int i = 0; i <= r.degree_bound_a; ++i) as.push_back(i % 2 ? (i + 1) / 2 : -(i / 2));
  for (int j = 0; j <= r.degree_bound_t; ++j) ts.push_back(j % 2 ? (j + 1) / 2 : -(j / 2));
  auto grid = resultant_grid(r.data, as, ts, kernel);
  r.samples = grid.size();

  // Undo the integer scaling: Res(c P, e Q) = c^n e^m Res(P, Q).
  const Rational unscale = Rational(1) / (pow(g.p4.scale, g.n) * pow(g.num.scale, g.m));

  std::vector<Rational> ta(ts.begin(), ts.end()), aa(as.begin(), as.end());
  const std::size_t nt = ts.size();
  std::vector<QPoly> in_t(as.size());
  for (std::size_t i = 0; i < as.size(); ++i) {
    std::vector<Rational> ys(grid.begin() + i * nt, grid.begin() + (i + 1) * nt);
    in_t[i] = interpolate(ta, ys);
  }
  MPoly res;
  for (int k = 0; k <= r.degree_bound_t; ++k) {
    std::vector<Rational> ys;
    for (const auto& p : in_t) ys.push_back(p.coeff(k));
    QPoly ca = interpolate(aa, ys);
    for (int i = 0; i <= ca.degree(); ++i) {
      Exponent e{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(k)};
      res.add_term(e, ca.coeffs()[i] * unscale);
    }
  }
  r.resultant = std::move(res);
  r.quotient = exact_quotient(r.resultant, factor);
  return r;
}

}  // namespace preper
