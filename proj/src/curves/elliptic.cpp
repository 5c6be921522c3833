#include "preper/curves/elliptic.hpp"

#include <stdexcept>

namespace preper {

ECPoint ECPoint::from_projective(const QPoint& p) {
  if (p.size() != 3) throw std::invalid_argument("elliptic point needs three projective coordinates");
  if (p[2].is_zero()) {
    if (p[0].is_zero() && !p[1].is_zero()) return at_infinity();
    throw std::invalid_argument("[X : Y : 0] with X != 0 is not on a Weierstrass cubic");
  }
  return affine(p[0] / p[2], p[1] / p[2]);
}

std::string ECPoint::to_string() const {
  return infinity ? "O" : "(" + x.to_string() + ", " + y.to_string() + ")";
}

bool on_curve(const EllipticCurveW& e, const ECPoint& p) {
  if (p.infinity) return true;
  const auto& x = p.x;
  const auto& y = p.y;
  return (y * y + e.a1 * x * y + e.a3 * y - (x * x * x + e.a2 * x * x + e.a4 * x + e.a6)).is_zero();
}

ECPoint negate(const EllipticCurveW& e, const ECPoint& p) {
  if (p.infinity) return p;
  return ECPoint::affine(p.x, -p.y - e.a1 * p.x - e.a3);
}

ECPoint add(const EllipticCurveW& e, const ECPoint& p, const ECPoint& q) {
  if (p.infinity) return q;
  if (q.infinity) return p;
  Rational lambda, nu;
  if (p.x == q.x) {
    if (p.y + q.y + e.a1 * q.x + e.a3 == 0) return ECPoint::at_infinity();
    Rational num = 3 * p.x * p.x + 2 * e.a2 * p.x + e.a4 - e.a1 * p.y;
    Rational den = 2 * p.y + e.a1 * p.x + e.a3;
    lambda = num / den;
    nu = (-p.x * p.x * p.x + e.a4 * p.x + 2 * e.a6 - e.a3 * p.y) / den;
  } else {
    lambda = (q.y - p.y) / (q.x - p.x);
    nu = (p.y * q.x - q.y * p.x) / (q.x - p.x);
  }
  Rational x3 = lambda * lambda + e.a1 * lambda - e.a2 - p.x - q.x;
  Rational y3 = -(lambda + e.a1) * x3 - nu - e.a3;
  return ECPoint::affine(x3, y3);
}

ECPoint multiply(const EllipticCurveW& e, const ECPoint& p, long n) {
  ECPoint base = n < 0 ? negate(e, p) : p;
  unsigned long m = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
  ECPoint acc = ECPoint::at_infinity();
  while (m) {
    if (m & 1) acc = add(e, acc, base);
    base = add(e, base, base);
    m >>= 1;
  }
  return acc;
}

std::string TorsionOrder::to_string() const {
  return order ? std::to_string(*order) : "infinite (nP != O for n <= " + std::to_string(kTorsionBound) + ")";
}

TorsionOrder ec_order_of_point(const EllipticCurveW& e, const ECPoint& p) {
  if (!on_curve(e, p)) throw std::invalid_argument(p.to_string() + " is not on " + e.name);
  ECPoint acc = p;
  for (int n = 1; n <= kTorsionBound; ++n) {
    if (acc.infinity) return {n};
    acc = add(e, acc, p);
  }
  return {};
}

}  // namespace preper
