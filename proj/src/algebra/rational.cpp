#include "preper/algebra/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace preper {

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto strip = [](std::string& x) {
    while (!x.empty() && std::isspace(static_cast<unsigned char>(x.front()))) x.erase(x.begin());
    while (!x.empty() && std::isspace(static_cast<unsigned char>(x.back()))) x.pop_back();
  };
  strip(s);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  Integer num, den = 1;
  try {
    if (slash == std::string::npos) {
      if (num.set_str(s[0] == '+' ? s.substr(1) : s, 10) != 0) throw std::invalid_argument(s);
    } else {
      std::string ns = s.substr(0, slash), ds = s.substr(slash + 1);
      strip(ns);
      strip(ds);
      if (!ns.empty() && ns[0] == '+') ns.erase(ns.begin());
      if (num.set_str(ns, 10) != 0 || den.set_str(ds, 10) != 0) throw std::invalid_argument(s);
    }
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational literal '" + s + "'");
  }
  return Rational(num, den);
}

std::string Rational::to_string() const { return q_.get_str(10); }

Integer Rational::height() const {
  Integer n = abs(q_.get_num());
  Integer d = q_.get_den();
  return n > d ? n : d;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero rational");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational pow(const Rational& base, unsigned exponent) {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), base.value().get_num_mpz_t(), exponent);
  mpz_pow_ui(d.get_mpz_t(), base.value().get_den_mpz_t(), exponent);
  return Rational(n, d);
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

std::optional<Rational> square_root_rational(const Rational& q) {
  if (q.sign() < 0) return std::nullopt;
  Integer n = q.num(), d = q.den();
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0 || mpz_perfect_square_p(d.get_mpz_t()) == 0) {
    return std::nullopt;
  }
  Integer rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return Rational(rn, rd);
}

std::optional<std::uint64_t> reduce_mod(const Rational& r, std::uint64_t p) {
  Integer P = static_cast<unsigned long>(p);
  Integer d = r.den() % P;
  if (d == 0) return std::nullopt;
  Integer inv;
  mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), P.get_mpz_t());
  Integer n = r.num() % P;
  if (n < 0) n += P;
  Integer res = (n * inv) % P;
  return res.get_ui();
}

std::optional<Integer> exact_quotient(const Integer& a, const Integer& b) {
  if (b == 0) return std::nullopt;
  if (mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) == 0) return std::nullopt;
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace preper
