#include "preper/algebra/mpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace preper {

namespace {

void trim(Exponent& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

Exponent add_exp(const Exponent& a, const Exponent& b) {
  Exponent r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

std::optional<Exponent> sub_exp(const Exponent& a, const Exponent& b) {
  if (b.size() > a.size()) return std::nullopt;
  Exponent r = a;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (r[i] < b[i]) return std::nullopt;
    r[i] -= b[i];
  }
  trim(r);
  return r;
}

std::uint32_t exp_at(const Exponent& e, std::size_t i) { return i < e.size() ? e[i] : 0; }

int degree(const Exponent& e) {
  int d = 0;
  for (auto x : e) d += static_cast<int>(x);
  return d;
}

}  // namespace

MPoly::MPoly(const Rational& c) {
  if (!c.is_zero()) t_.emplace(Exponent{}, c);
}

MPoly MPoly::variable(std::size_t i) {
  Exponent e(i + 1);
  e[i] = 1;
  return monomial(std::move(e), Rational(1));
}

MPoly MPoly::monomial(Exponent e, const Rational& c) {
  MPoly p;
  p.add_term(std::move(e), c);
  return p;
}

bool MPoly::is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.empty()); }

Rational MPoly::constant_term() const { return coeff(Exponent{}); }

Rational MPoly::coeff(const Exponent& e) const {
  Exponent k = e;
  trim(k);
  auto it = t_.find(k);
  return it == t_.end() ? Rational() : it->second;
}

std::size_t MPoly::nvars() const {
  std::size_t n = 0;
  for (const auto& [e, c] : t_) n = std::max(n, e.size());
  return n;
}

int MPoly::degree_in(std::size_t var) const {
  if (t_.empty()) return -1;
  int d = 0;
  for (const auto& [e, c] : t_) d = std::max(d, static_cast<int>(exp_at(e, var)));
  return d;
}

int MPoly::total_degree() const {
  if (t_.empty()) return -1;
  int d = 0;
  for (const auto& [e, c] : t_) d = std::max(d, degree(e));
  return d;
}

bool MPoly::is_homogeneous() const {
  if (t_.empty()) return true;
  const int d = degree(t_.begin()->first);
  return std::all_of(t_.begin(), t_.end(), [d](const auto& kv) { return degree(kv.first) == d; });
}

void MPoly::add_term(Exponent e, const Rational& c) {
  if (c.is_zero()) return;
  trim(e);
  auto [it, inserted] = t_.emplace(std::move(e), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [e, c] : o.t_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (const auto& [e, c] : o.t_) add_term(e, -c);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r;
  for (const auto& [ea, ca] : a.t_)
    for (const auto& [eb, cb] : b.t_) r.add_term(add_exp(ea, eb), ca * cb);
  return r;
}

MPoly& MPoly::operator*=(const MPoly& o) { return *this = *this * o; }

MPoly operator-(const MPoly& a) {
  MPoly r;
  for (const auto& [e, c] : a.t_) r.t_.emplace(e, -c);
  return r;
}

Rational MPoly::evaluate(const std::vector<Rational>& x) const {
  if (nvars() > x.size()) throw std::invalid_argument("evaluate: too few coordinates");
  Rational sum;
  for (const auto& [e, c] : t_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) term *= pow(x[i], e[i]);
    sum += term;
  }
  return sum;
}

MPoly MPoly::derivative(std::size_t var) const {
  MPoly r;
  for (const auto& [e, c] : t_) {
    const auto k = exp_at(e, var);
    if (k == 0) continue;
    Exponent f = e;
    f[var] -= 1;
    r.add_term(std::move(f), c * Rational(static_cast<long>(k)));
  }
  return r;
}

MPoly MPoly::compose(const std::vector<MPoly>& vals) const {
  // Cache powers per variable.
  std::vector<std::vector<MPoly>> powers(vals.size());
  auto power = [&](std::size_t i, std::uint32_t k) -> const MPoly& {
    auto& v = powers[i];
    if (v.empty()) v.emplace_back(1);
    while (v.size() <= k) v.push_back(v.back() * vals[i]);
    return v[k];
  };
  MPoly r;
  for (const auto& [e, c] : t_) {
    MPoly term(c);
    Exponent rest;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (i < vals.size()) {
        term = term * power(i, e[i]);
      } else {
        if (rest.size() <= i) rest.resize(i + 1);
        rest[i] = e[i];
      }
    }
    if (!rest.empty()) term = term * monomial(rest, Rational(1));
    r += term;
  }
  return r;
}

MPoly MPoly::substitute(std::size_t var, const MPoly& value) const {
  std::vector<MPoly> vals(var + 1);
  for (std::size_t i = 0; i < var; ++i) vals[i] = variable(i);
  vals[var] = value;
  return compose(vals);
}

MPoly MPoly::homogenize(std::size_t var) const {
  const int d = total_degree();
  MPoly r;
  for (const auto& [e, c] : t_) {
    Exponent f = e;
    if (f.size() <= var) f.resize(var + 1);
    f[var] += static_cast<std::uint32_t>(d - degree(e));
    r.add_term(std::move(f), c);
  }
  return r;
}

MPoly MPoly::primitive() const {
  if (t_.empty()) return *this;
  Integer l = 1, g = 0;
  for (const auto& [e, c] : t_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
  for (const auto& [e, c] : t_) {
    Integer v = c.num() * (l / c.den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  Rational s(l, g);
  if (leading_term().second.sign() < 0) s = -s;
  MPoly r;
  for (const auto& [e, c] : t_) r.t_.emplace(e, c * s);
  return r;
}

MPoly pow(const MPoly& base, unsigned e) {
  MPoly r(1), b = base;
  while (e) {
    if (e & 1U) r = r * b;
    e >>= 1U;
    if (e) b = b * b;
  }
  return r;
}

std::optional<MPoly> exact_quotient(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) return std::nullopt;
  MPoly rem = a, q;
  const auto& [lb_e, lb_c] = b.leading_term();
  while (!rem.is_zero()) {
    const auto& [e, c] = rem.leading_term();
    auto d = sub_exp(e, lb_e);
    if (!d) return std::nullopt;
    MPoly t = MPoly::monomial(*d, c / lb_c);
    q += t;
    rem -= t * b;
  }
  return q;
}

std::string to_string(const MPoly& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Exponent, Rational>> terms(p.terms().begin(), p.terms().end());
  // Decreasing total degree, then decreasing lex.
  std::stable_sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
    int dx = degree(x.first), dy = degree(y.first);
    if (dx != dy) return dx > dy;
    return x.first > y.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms) {
    Rational mag = abs(c);
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (!mag.is_one() || e.empty()) {
      os << mag;
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << "*";
      os << (i < names.size() ? names[i] : "x" + std::to_string(i));
      if (e[i] > 1) os << "^" << e[i];
      wrote = true;
    }
  }
  return os.str();
}

QPoly to_qpoly(const MPoly& p, std::size_t var) {
  std::vector<Rational> c(std::max(p.degree_in(var), -1) + 1);
  for (const auto& [e, v] : p.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != var && e[i]) throw std::invalid_argument("to_qpoly: polynomial involves another variable");
    c[exp_at(e, var)] = v;
  }
  return QPoly(std::move(c));
}

MPoly from_qpoly(const QPoly& p, std::size_t var) {
  MPoly r;
  for (int i = 0; i <= p.degree(); ++i) {
    Exponent e(var + 1);
    e[var] = static_cast<std::uint32_t>(i);
    r.add_term(std::move(e), p.coeffs()[i]);
  }
  return r;
}

QQPoly to_qqpoly(const MPoly& p, std::size_t outer, std::size_t inner) {
  const int dz = p.degree_in(outer), da = p.degree_in(inner);
  if (dz < 0) return {};
  std::vector<std::vector<Rational>> c(dz + 1, std::vector<Rational>(da + 1));
  for (const auto& [e, v] : p.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != outer && i != inner && e[i]) throw std::invalid_argument("to_qqpoly: extra variable");
    c[exp_at(e, outer)][exp_at(e, inner)] = v;
  }
  std::vector<QPoly> out;
  for (auto& row : c) out.emplace_back(std::move(row));
  return QQPoly(std::move(out));
}

MPoly from_qqpoly(const QQPoly& p, std::size_t outer, std::size_t inner) {
  MPoly r;
  for (int i = 0; i <= p.degree(); ++i) {
    const auto& c = p.coeffs()[i];
    for (int j = 0; j <= c.degree(); ++j) {
      Exponent e(std::max(outer, inner) + 1);
      e[outer] = static_cast<std::uint32_t>(i);
      e[inner] = static_cast<std::uint32_t>(j);
      r.add_term(std::move(e), c.coeffs()[j]);
    }
  }
  return r;
}

UniPoly<MPoly> to_univariate(const MPoly& p, std::size_t var) {
  std::vector<MPoly> c(std::max(p.degree_in(var), -1) + 1);
  for (const auto& [e, v] : p.terms()) {
    Exponent f = e;
    std::uint32_t k = 0;
    if (var < f.size()) {
      k = f[var];
      f[var] = 0;
    }
    c[k].add_term(std::move(f), v);
  }
  return UniPoly<MPoly>(std::move(c));
}

MPoly from_univariate(const UniPoly<MPoly>& p, std::size_t var) {
  MPoly r;
  for (int i = 0; i <= p.degree(); ++i) {
    Exponent e(var + 1);
    e[var] = static_cast<std::uint32_t>(i);
    r += p.coeffs()[i] * MPoly::monomial(e, Rational(1));
  }
  return r;
}

RatFunc::RatFunc(MPoly n, MPoly d) : num(std::move(n)), den(std::move(d)) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (den.is_constant() && !den.constant_term().is_one()) {
    num = num * MPoly(Rational(1) / den.constant_term());
    den = MPoly(1);
  }
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den == b.den) return RatFunc(a.num + b.num, a.den);
  return RatFunc(a.num * b.den + b.num * a.den, a.den * b.den);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) { return RatFunc(a.num * b.num, a.den * b.den); }

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.num.is_zero()) throw std::domain_error("division by zero rational function");
  return RatFunc(a.num * b.den, a.den * b.num);
}

RatFunc operator-(const RatFunc& a) { return RatFunc(-a.num, a.den); }

MPoly RatFunc::as_polynomial() const {
  if (!is_polynomial()) throw std::domain_error("not a polynomial");
  return num * MPoly(Rational(1) / den.constant_term());
}

RatFunc pow(const RatFunc& base, int e) {
  if (e >= 0) return RatFunc(pow(base.num, static_cast<unsigned>(e)), pow(base.den, static_cast<unsigned>(e)));
  if (base.num.is_zero()) throw std::domain_error("zero to a negative power");
  return RatFunc(pow(base.den, static_cast<unsigned>(-e)), pow(base.num, static_cast<unsigned>(-e)));
}

RatFunc substitute(const MPoly& p, const std::vector<RatFunc>& vals) {
  const std::size_t n = vals.size();
  std::vector<int> deg(n);
  for (std::size_t i = 0; i < n; ++i) deg[i] = std::max(p.degree_in(i), 0);
  std::vector<std::vector<MPoly>> np(n), dp(n);
  for (std::size_t i = 0; i < n; ++i) {
    np[i].emplace_back(1);
    dp[i].emplace_back(1);
    for (int k = 1; k <= deg[i]; ++k) {
      np[i].push_back(np[i].back() * vals[i].num);
      dp[i].push_back(dp[i].back() * vals[i].den);
    }
  }
  MPoly num;
  for (const auto& [e, c] : p.terms()) {
    MPoly term(c);
    Exponent rest;
    for (std::size_t i = 0; i < std::max(e.size(), n); ++i) {
      const auto k = exp_at(e, i);
      if (i < n) {
        term = term * np[i][k] * dp[i][deg[i] - static_cast<int>(k)];
      } else if (k) {
        if (rest.size() <= i) rest.resize(i + 1);
        rest[i] = k;
      }
    }
    if (!rest.empty()) term = term * MPoly::monomial(rest, Rational(1));
    num += term;
  }
  MPoly den(1);
  for (std::size_t i = 0; i < n; ++i) den = den * dp[i][deg[i]];
  return RatFunc(std::move(num), std::move(den));
}

}  // namespace preper
