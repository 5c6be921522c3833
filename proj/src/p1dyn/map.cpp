#include "preper/p1dyn/map.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "preper/algebra/unipoly.hpp"

namespace preper {

namespace {

Integer gcd3(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// Clears denominators of the six coefficients and makes them primitive.
std::array<Integer, 6> primitive_six(const std::array<Rational, 6>& c) {
  Integer l = 1;
  for (const auto& x : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
  std::array<Integer, 6> out;
  Integer g = 0;
  for (std::size_t i = 0; i < 6; ++i) {
    out[i] = c[i].num() * (l / c[i].den());
    g = gcd3(g, out[i]);
  }
  if (g == 0) throw std::domain_error("zero map");
  for (auto& x : out) x /= g;
  return out;
}

}  // namespace

ProjPoint::ProjPoint(Integer x, Integer y) {
  if (x == 0 && y == 0) throw std::domain_error("(0, 0) is not a point of P^1");
  Integer g = gcd3(x, y);
  x /= g;
  y /= g;
  if (y < 0 || (y == 0 && x < 0)) {
    x = -x;
    y = -y;
  }
  x_ = std::move(x);
  y_ = std::move(y);
}

ProjPoint ProjPoint::parse(const std::string& s) {
  if (s == "inf" || s == "oo" || s == "∞" || s == "infinity") return infinity();
  return from_rational(Rational::parse(s));
}

Rational ProjPoint::affine() const {
  if (is_infinity()) throw std::domain_error("infinity has no affine coordinate");
  return Rational(x_, y_);
}

std::string ProjPoint::to_string() const { return is_infinity() ? "inf" : affine().to_string(); }

std::strong_ordering operator<=>(const ProjPoint& a, const ProjPoint& b) {
  if (a.is_infinity() || b.is_infinity()) {
    if (a.is_infinity() && b.is_infinity()) return std::strong_ordering::equal;
    return a.is_infinity() ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return a.affine() <=> b.affine();
}

QuadraticRoots binary_quadratic_roots(const Integer& A, const Integer& B, const Integer& C) {
  QuadraticRoots out;
  if (A == 0 && B == 0 && C == 0) throw std::domain_error("binary quadratic is identically zero");
  if (A == 0) {
    // Y (B X + C Y) = 0: infinity is a root.
    out.points.push_back(ProjPoint::infinity());
    if (B == 0) {
      out.double_root = true;
    } else {
      out.points.emplace_back(-C, B);
    }
  } else {
    Integer disc = B * B - 4 * A * C;
    if (disc < 0 || mpz_perfect_square_p(disc.get_mpz_t()) == 0) {
      out.irrational_discriminant = disc;
      return out;
    }
    Integer s;
    mpz_sqrt(s.get_mpz_t(), disc.get_mpz_t());
    out.points.emplace_back(-B + s, 2 * A);
    if (s == 0) {
      out.double_root = true;
    } else {
      out.points.emplace_back(-B - s, 2 * A);
    }
  }
  std::sort(out.points.begin(), out.points.end());
  return out;
}

Moebius Moebius::make(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  std::array<Rational, 6> six{a, b, c, d, 0, 0};
  auto p = primitive_six(six);
  Moebius m{p[0], p[1], p[2], p[3]};
  if (m.determinant() == 0) throw std::domain_error("singular Moebius transformation");
  return m;
}

Moebius Moebius::inverse() const { return make(Rational(d), Rational(-b), Rational(-c), Rational(a)); }

ProjPoint Moebius::apply(const ProjPoint& p) const { return ProjPoint(a * p.x() + b * p.y(), c * p.x() + d * p.y()); }

Moebius compose(const Moebius& f, const Moebius& g) {
  return Moebius::make(Rational(f.a * g.a + f.b * g.c), Rational(f.a * g.b + f.b * g.d), Rational(f.c * g.a + f.d * g.c),
                       Rational(f.c * g.b + f.d * g.d));
}

Integer quadratic_resultant(const std::array<Integer, 3>& f, const std::array<Integer, 3>& g) {
  Integer e = f[2] * g[0] - f[0] * g[2];
  return e * e - (f[2] * g[1] - f[1] * g[2]) * (f[1] * g[0] - f[0] * g[1]);
}

QuadRatMap::QuadRatMap(const std::array<Rational, 3>& f, const std::array<Rational, 3>& g) {
  auto p = primitive_six({f[0], f[1], f[2], g[0], g[1], g[2]});
  f_ = {p[0], p[1], p[2]};
  g_ = {p[3], p[4], p[5]};
  for (const Integer* x : {&g_[2], &g_[1], &g_[0], &f_[2], &f_[1], &f_[0]}) {
    if (*x == 0) continue;
    if (*x < 0) {
      for (auto& y : f_) y = -y;
      for (auto& y : g_) y = -y;
    }
    break;
  }
  if (quadratic_resultant(f_, g_) == 0) throw std::domain_error("degenerate map: Res(F, G) = 0");
}

Integer QuadRatMap::resultant() const { return quadratic_resultant(f_, g_); }

QuadForms<Rational> QuadRatMap::forms() const {
  QuadForms<Rational> m;
  for (int i = 0; i < 3; ++i) {
    m.f[i] = Rational(f_[i]);
    m.g[i] = Rational(g_[i]);
  }
  return m;
}

ProjPoint QuadRatMap::apply(const ProjPoint& p) const {
  const Integer& X = p.x();
  const Integer& Y = p.y();
  Integer XX = X * X, XY = X * Y, YY = Y * Y;
  Integer F = f_[2] * XX + f_[1] * XY + f_[0] * YY;
  Integer G = g_[2] * XX + g_[1] * XY + g_[0] * YY;
  return ProjPoint(F, G);
}

std::string QuadRatMap::to_string() const {
  auto poly = [](const std::array<Integer, 3>& c) {
    return preper::to_string(QPoly(std::vector<Rational>{Rational(c[0]), Rational(c[1]), Rational(c[2])}), "z");
  };
  auto wrap = [](const std::string& s, const char* breaks) {
    return s.find_first_of(breaks) == std::string::npos ? s : "(" + s + ")";
  };
  std::string num = poly(f_), den = poly(g_);
  if (den == "1") return num;
  return wrap(num, " ") + "/" + wrap(den, " *-");
}

QuadRatMap conjugate(const QuadRatMap& phi, const Moebius& m) {
  // phi o m: substitute X -> aX + bY, Y -> cX + dY.
  auto subst = [&](const std::array<Integer, 3>& c) {
    // (aX+bY)^2, (aX+bY)(cX+dY), (cX+dY)^2 as {Y^2, XY, X^2} coefficient triples.
    std::array<Integer, 3> sq1{m.b * m.b, 2 * m.a * m.b, m.a * m.a};
    std::array<Integer, 3> mix{m.b * m.d, m.a * m.d + m.b * m.c, m.a * m.c};
    std::array<Integer, 3> sq2{m.d * m.d, 2 * m.c * m.d, m.c * m.c};
    std::array<Integer, 3> out;
    for (int i = 0; i < 3; ++i) out[i] = c[2] * sq1[i] + c[1] * mix[i] + c[0] * sq2[i];
    return out;
  };
  auto F1 = subst(phi.f()), G1 = subst(phi.g());
  // m^-1 = (d, -b; -c, a) applied to [F1 : G1].
  std::array<Rational, 3> F2, G2;
  for (int i = 0; i < 3; ++i) {
    F2[i] = Rational(m.d * F1[i] - m.b * G1[i]);
    G2[i] = Rational(-m.c * F1[i] + m.a * G1[i]);
  }
  return QuadRatMap(F2, G2);
}

}  // namespace preper
