#include "preper/curves/model.hpp"

#include <sstream>
#include <stdexcept>

namespace preper {

namespace {

void check_dimension(const CurveModel& c, std::size_t n) {
  if (n != c.dimension())
    throw std::invalid_argument(c.name + ": point has " + std::to_string(n) + " coordinates, expected " +
                                std::to_string(c.dimension()));
}

template <class T, class IsZero>
void check_nonzero(const CurveModel& c, const std::vector<T>& p, IsZero is_zero_fn) {
  if (c.ambient == Ambient::affine) return;
  for (const auto& x : p)
    if (!is_zero_fn(x)) return;
  throw std::invalid_argument(c.name + ": the zero vector is not a projective point");
}

unsigned long valuation(const Integer& v, unsigned long p) {
  if (v == 0) return ~0UL;
  Integer x = v;
  unsigned long k = 0;
  while (mpz_divisible_ui_p(x.get_mpz_t(), p)) {
    mpz_divexact_ui(x.get_mpz_t(), x.get_mpz_t(), p);
    ++k;
  }
  return k;
}

}  // namespace

std::vector<unsigned> CurveModel::weights() const {
  std::vector<unsigned> w(vars.size(), 1);
  if (ambient == Ambient::weighted && w.size() == 3) w[1] = y_weight;
  return w;
}

PlaneCurveModel::PlaneCurveModel(std::string n, std::vector<std::string> v, const MPoly& eq, std::optional<int> g)
    : name(std::move(n)), vars(std::move(v)), equation(eq.primitive()), genus(g) {
  if (vars.size() != 2) throw std::invalid_argument("plane curve needs two variables");
  if (equation.nvars() > 2) throw std::invalid_argument("plane curve equation uses a third variable");
}

CurveModel PlaneCurveModel::affine() const { return {name, Ambient::affine, vars, {equation}, 1, genus}; }

CurveModel PlaneCurveModel::projective() const {
  return {name, Ambient::projective, {vars[0], vars[1], "z"}, {equation.homogenize(2)}, 1, genus};
}

HyperellipticModel::HyperellipticModel(std::string n, QPoly poly) : name(std::move(n)), f(std::move(poly)) {
  if (f.degree() < 3 || f.degree() > 8) throw std::invalid_argument(name + ": need 3 <= deg f <= 8");
  if (gcd(f, f.derivative()).degree() != 0) throw std::invalid_argument(name + ": f is not squarefree");
}

CurveModel HyperellipticModel::model() const {
  const int g = genus();
  const int d = 2 * g + 2;
  MPoly eq = pow(MPoly::variable(1), 2);
  for (int i = 0; i <= f.degree(); ++i) {
    if (f.coeff(i).is_zero()) continue;
    eq -= MPoly::monomial({static_cast<std::uint32_t>(i), 0, static_cast<std::uint32_t>(d - i)}, f.coeff(i));
  }
  return {name, Ambient::weighted, {"X", "Y", "Z"}, {eq}, static_cast<unsigned>(g + 1), g};
}

EllipticCurveW::EllipticCurveW(std::string n, Rational b1, Rational b2, Rational b3, Rational b4, Rational b6)
    : name(std::move(n)), a1(std::move(b1)), a2(std::move(b2)), a3(std::move(b3)), a4(std::move(b4)), a6(std::move(b6)) {
  if (discriminant().is_zero()) throw std::invalid_argument(name + ": singular Weierstrass equation");
}

Rational EllipticCurveW::discriminant() const {
  Rational b2 = a1 * a1 + 4 * a2;
  Rational b4 = 2 * a4 + a1 * a3;
  Rational b6 = a3 * a3 + 4 * a6;
  Rational b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  return -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
}

CurveModel EllipticCurveW::model() const {
  auto m = [](std::uint32_t i, std::uint32_t j, std::uint32_t k, const Rational& c) {
    return MPoly::monomial({i, j, k}, c);
  };
  MPoly eq = m(0, 2, 1, 1) + m(1, 1, 1, a1) + m(0, 1, 2, a3) - m(3, 0, 0, 1) - m(2, 0, 1, a2) - m(1, 0, 2, a4) -
             m(0, 0, 3, a6);
  return {name, Ambient::projective, {"x", "y", "z"}, {eq}, 1, 1};
}

CurveModel SpaceCurveModel::model() const {
  if (projective)
    for (const auto& e : equations)
      if (!e.is_homogeneous()) throw std::invalid_argument(name + ": projective equation is not homogeneous");
  return {name, projective ? Ambient::projective : Ambient::affine, vars, equations, 1, genus};
}

bool on_curve(const CurveModel& c, const QPoint& p) {
  check_dimension(c, p.size());
  check_nonzero(c, p, [](const Rational& x) { return x.is_zero(); });
  for (const auto& e : c.equations)
    if (!e.evaluate(p).is_zero()) return false;
  return true;
}

bool on_curve(const CurveModel& c, const FPoint& p, const FiniteField& k) {
  check_dimension(c, p.size());
  check_nonzero(c, p, [](FFElem x) { return x == 0; });
  for (const auto& e : c.equations)
    if (FqPoly(e, k)(p) != 0) return false;
  return true;
}

QPoint normalize(const CurveModel& c, const QPoint& p) {
  check_dimension(c, p.size());
  check_nonzero(c, p, [](const Rational& x) { return x.is_zero(); });
  QPoint out = p;
  if (c.ambient == Ambient::affine) return out;
  const auto w = c.weights();
  std::size_t pivot = p.size();
  if (c.ambient == Ambient::weighted) {
    pivot = !p[2].is_zero() ? 2 : (!p[0].is_zero() ? 0 : 1);
  } else {
    for (std::size_t i = p.size(); i-- > 0;)
      if (!p[i].is_zero()) {
        pivot = i;
        break;
      }
  }
  if (c.ambient == Ambient::weighted && pivot == 1) return {Rational(0), Rational(1), Rational(0)};
  Rational lambda = Rational(1) / p[pivot];
  for (std::size_t i = 0; i < out.size(); ++i) out[i] *= pow(lambda, w[i]);
  return out;
}

FPoint normalize(const CurveModel& c, const FPoint& p, const FiniteField& k) {
  check_dimension(c, p.size());
  check_nonzero(c, p, [](FFElem x) { return x == 0; });
  FPoint out = p;
  if (c.ambient == Ambient::affine) return out;
  const auto w = c.weights();
  std::size_t pivot = p.size();
  if (c.ambient == Ambient::weighted) {
    pivot = p[2] != 0 ? 2 : (p[0] != 0 ? 0 : 1);
  } else {
    for (std::size_t i = p.size(); i-- > 0;)
      if (p[i] != 0) {
        pivot = i;
        break;
      }
  }
  if (c.ambient == Ambient::weighted && pivot == 1) return {0, 1, 0};
  FFElem lambda = k.inv(p[pivot]);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = k.mul(out[i], k.pow(lambda, w[i]));
  return out;
}

bool same_point(const CurveModel& c, const QPoint& a, const QPoint& b) { return normalize(c, a) == normalize(c, b); }

std::optional<FPoint> reduce_point(const CurveModel& c, const QPoint& p, const FiniteField& k) {
  check_dimension(c, p.size());
  const unsigned long prime = k.characteristic();
  FPoint out(p.size());
  if (c.ambient == Ambient::affine) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      auto r = k.from_rational(p[i]);
      if (!r) return std::nullopt;
      out[i] = *r;
    }
    return out;
  }
  check_nonzero(c, p, [](const Rational& x) { return x.is_zero(); });
  const auto w = c.weights();
  // Clear denominators, then strip the largest power of p compatible with the weights.
  Integer lambda = 1;
  for (const auto& x : p) mpz_lcm(lambda.get_mpz_t(), lambda.get_mpz_t(), x.den().get_mpz_t());
  std::vector<Integer> v(p.size());
  unsigned long strip = ~0UL;
  for (std::size_t i = 0; i < p.size(); ++i) {
    Integer scale;
    mpz_pow_ui(scale.get_mpz_t(), lambda.get_mpz_t(), w[i]);
    v[i] = p[i].num() * (scale / p[i].den());
    unsigned long val = valuation(v[i], prime);
    if (val != ~0UL) strip = std::min(strip, val / w[i]);
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    Integer d;
    mpz_ui_pow_ui(d.get_mpz_t(), prime, strip * w[i]);
    v[i] /= d;
    out[i] = k.from_integer(v[i]);
  }
  bool all_zero = std::all_of(out.begin(), out.end(), [](FFElem x) { return x == 0; });
  if (all_zero) return std::nullopt;
  return out;
}

std::string point_to_string(const QPoint& p, Ambient a) {
  std::ostringstream os;
  os << (a == Ambient::affine ? "(" : "[");
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? (a == Ambient::affine ? ", " : " : ") : "") << p[i];
  os << (a == Ambient::affine ? ")" : "]");
  return os.str();
}

std::string point_to_string(const FPoint& p, Ambient a, const FiniteField& k) {
  QPoint q;
  for (auto x : p) {
    // Prime-field elements print as their balanced representative.
    long v = static_cast<long>(x);
    if (k.degree() == 1 && v > static_cast<long>(k.characteristic() / 2)) v -= static_cast<long>(k.characteristic());
    q.emplace_back(v);
  }
  return point_to_string(q, a);
}

QPoint parse_point(const std::vector<std::string>& coords) {
  QPoint out;
  for (const auto& s : coords) out.push_back(Rational::parse(s));
  return out;
}

FqPoly::FqPoly(const MPoly& p, const FiniteField& k) : k_(&k) {
  for (const auto& [e, c] : p.terms()) {
    auto r = k.from_rational(c);
    if (!r)
      throw std::domain_error("coefficient " + c.to_string() + " has no reduction mod " +
                              std::to_string(k.characteristic()));
    if (*r != 0) terms_.emplace_back(e, *r);
  }
}

FFElem FqPoly::operator()(const FPoint& x) const {
  FFElem acc = 0;
  for (const auto& [e, c] : terms_) {
    FFElem t = c;
    for (std::size_t i = 0; i < e.size() && t != 0; ++i) {
      if (e[i] == 0) continue;
      if (i >= x.size()) throw std::invalid_argument("polynomial uses more variables than the point has");
      t = k_->mul(t, k_->pow(x[i], e[i]));
    }
    acc = k_->add(acc, t);
  }
  return acc;
}

}  // namespace preper
