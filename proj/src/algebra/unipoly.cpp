#include "preper/algebra/unipoly.hpp"

#include <sstream>

namespace preper {

namespace {

// Appends "c*var^i" with sign handling; `first` tracks whether a leading
// sign is needed.
void append_term(std::ostringstream& os, const Rational& c, int i, const std::string& var, bool& first) {
  Rational mag = abs(c);
  if (first) {
    if (c.sign() < 0) os << "-";
  } else {
    os << (c.sign() < 0 ? " - " : " + ");
  }
  first = false;
  if (i == 0) {
    os << mag;
    return;
  }
  if (!mag.is_one()) os << mag << "*";
  os << var;
  if (i > 1) os << "^" << i;
}

Integer lcm_den(const QPoly& p) {
  Integer l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
  return l;
}

Integer gcd_num(const QPoly& p) {
  Integer g = 0;
  for (const auto& c : p.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.num().get_mpz_t());
  return g;
}

}  // namespace

std::string to_string(const QPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const Rational& c = p.coeffs()[i];
    if (c.is_zero()) continue;
    append_term(os, c, i, var, first);
  }
  return os.str();
}

QPoly primitive_integer(const QPoly& p) {
  if (p.is_zero()) return p;
  Rational scale(lcm_den(p));
  QPoly q = p * scale;
  Integer g = gcd_num(q);
  Rational s(Integer(1), g);
  if (q.leading().sign() < 0) s = -s;
  return q * s;
}

QPoly content(const QQPoly& p) {
  if (p.is_zero()) return QPoly{};
  QPoly g;
  for (const auto& c : p.coeffs()) {
    g = gcd(g, c);
    if (g.degree() == 0) break;
  }
  // g is monic; fix the rational scale so that p / content has coprime
  // integer coefficients and a positive leading coefficient.
  Integer l = 1;
  Integer n = 0;
  for (const auto& c : p.coeffs()) {
    auto q = exact_quotient(c, g);
    for (const auto& x : q->coeffs()) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
    }
  }
  for (const auto& c : p.coeffs()) {
    auto q = exact_quotient(c, g);
    for (const auto& x : q->coeffs()) {
      Integer v = x.num() * (l / x.den());
      mpz_gcd(n.get_mpz_t(), n.get_mpz_t(), v.get_mpz_t());
    }
  }
  Rational s(n, l);
  if (p.leading().leading().sign() < 0) s = -s;
  return g * s;
}

QQPoly primitive_part(const QQPoly& p) {
  if (p.is_zero()) return p;
  QPoly c = content(p);
  std::vector<QPoly> out;
  out.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) out.push_back(*exact_quotient(x, c));
  return QQPoly(std::move(out));
}

QQPoly gcd(const QQPoly& a, const QQPoly& b) {
  if (a.is_zero()) return b.is_zero() ? b : primitive_part(b) * make_monic(content(b));
  if (b.is_zero()) return primitive_part(a) * make_monic(content(a));
  QPoly cg = gcd(content(a), content(b));
  QQPoly x = primitive_part(a);
  QQPoly y = primitive_part(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    QQPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.is_zero() ? r : primitive_part(r);
  }
  return primitive_part(x) * cg;
}

QPoly specialize_inner(const QQPoly& p, const Rational& value) {
  std::vector<Rational> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(c.evaluate(value));
  return QPoly(std::move(out));
}

QQPoly swap_variables(const QQPoly& p) {
  int inner = -1;
  for (const auto& c : p.coeffs()) inner = std::max(inner, c.degree());
  if (inner < 0) return {};
  std::vector<std::vector<Rational>> rows(inner + 1, std::vector<Rational>(p.coeffs().size()));
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    const auto& c = p.coeffs()[i];
    for (int j = 0; j <= c.degree(); ++j) rows[j][i] = c.coeffs()[j];
  }
  std::vector<QPoly> out;
  out.reserve(rows.size());
  for (auto& r : rows) out.emplace_back(std::move(r));
  return QQPoly(std::move(out));
}

std::string to_string(const QQPoly& p, const std::string& outer, const std::string& inner) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const QPoly& c = p.coeffs()[i];
    if (c.is_zero()) continue;
    if (c.degree() == 0) {
      append_term(os, c.leading(), i, outer, first);
      continue;
    }
    os << (first ? "" : " + ");
    first = false;
    os << "(" << to_string(c, inner) << ")";
    if (i > 0) os << "*" << outer;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

}  // namespace preper
