#include "preper/algebra/roots.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace preper {

namespace {

using Small = std::vector<std::uint64_t>;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1U) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1U;
  }
  return r;
}

void trim(Small& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a by b over F_p; b nonzero.
Small rem_mod(Small a, const Small& b, std::uint64_t p) {
  const std::uint64_t inv = powmod(b.back(), p - 2, p);
  while (a.size() >= b.size()) {
    std::uint64_t c = mulmod(a.back(), inv, p);
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = (a[shift + i] + p - mulmod(c, b[i], p)) % p;
    trim(a);
  }
  return a;
}

std::size_t gcd_degree(Small a, Small b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Small r = rem_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a.empty() ? 0 : a.size() - 1;
}

Small reduce(const std::vector<Integer>& c, std::uint64_t p) {
  Small out(c.size());
  Integer P = static_cast<unsigned long>(p);
  for (std::size_t i = 0; i < c.size(); ++i) {
    Integer r = c[i] % P;
    if (r < 0) r += P;
    out[i] = r.get_ui();
  }
  return out;
}

Integer eval_mod(const std::vector<Integer>& c, const Integer& x, const Integer& m) {
  Integer acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = (acc * x + *it) % m;
  }
  if (acc < 0) acc += m;
  return acc;
}

bool homogeneous_zero(const std::vector<Integer>& c, const Integer& n, const Integer& d) {
  // Horner on the homogenised form: acc = acc*n + c_i*d^(deg-i)
  Integer acc = 0;
  std::vector<Integer> dp(c.size());
  dp[0] = 1;
  for (std::size_t i = 1; i < c.size(); ++i) dp[i] = dp[i - 1] * d;
  const std::size_t deg = c.size() - 1;
  for (std::size_t k = 0; k <= deg; ++k) {
    std::size_t i = deg - k;
    acc = acc * n + c[i] * dp[deg - i];
  }
  return acc == 0;
}

// Rational reconstruction of r mod m with |num| <= nb and 0 < den <= db.
bool reconstruct(const Integer& r, const Integer& m, const Integer& nb, const Integer& db, Integer& num, Integer& den) {
  Integer r0 = m, r1 = r, t0 = 0, t1 = 1;
  while (abs(r1) > nb) {
    Integer q = r0 / r1;
    Integer r2 = r0 - q * r1;
    Integer t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0) return false;
  num = r1;
  den = t1;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return den <= db;
}

}  // namespace

std::vector<Integer> integer_coefficients(const QPoly& p) {
  QPoly q = primitive_integer(p);
  std::vector<Integer> out;
  out.reserve(q.coeffs().size());
  for (const auto& c : q.coeffs()) out.push_back(c.num());
  return out;
}

std::vector<Rational> rational_roots(const QPoly& p) {
  if (p.is_zero()) throw std::domain_error("identically zero");
  std::vector<Rational> roots;
  QPoly f = primitive_integer(p);
  if (f.coeff(0).is_zero()) {
    roots.emplace_back(0);
    std::size_t k = 0;
    while (f.coeffs()[k].is_zero()) ++k;
    f = QPoly(std::vector<Rational>(f.coeffs().begin() + static_cast<long>(k), f.coeffs().end()));
  }
  if (f.degree() >= 2) {
    QPoly g = gcd(f, f.derivative());
    if (g.degree() > 0) f = divmod(f, g).first;
  }
  if (f.degree() >= 1) {
    const auto c = integer_coefficients(f);
    const Integer& lc = c.back();
    const Integer& c0 = c.front();
    if (c.size() == 2) {
      roots.emplace_back(-c0, lc);
    } else {
      // A prime where f stays squarefree of full degree.
      Integer ell = 101;
      Small fm;
      for (;; mpz_nextprime(ell.get_mpz_t(), ell.get_mpz_t())) {
        if (lc % ell == 0) continue;
        fm = reduce(c, ell.get_ui());
        Small d(fm.size() - 1);
        for (std::size_t i = 1; i < fm.size(); ++i) d[i - 1] = mulmod(fm[i], i, ell.get_ui());
        if (gcd_degree(fm, d, ell.get_ui()) == 0) break;
      }
      const std::uint64_t l = ell.get_ui();
      std::vector<Integer> deriv(c.size() - 1);
      for (std::size_t i = 1; i < c.size(); ++i) deriv[i - 1] = c[i] * static_cast<unsigned long>(i);
      const Integer nb = abs(c0), db = abs(lc);
      const Integer target = 2 * nb * db;
      for (std::uint64_t x = 0; x < l; ++x) {
        std::uint64_t acc = 0;
        for (auto it = fm.rbegin(); it != fm.rend(); ++it) acc = (mulmod(acc, x, l) + *it) % l;
        if (acc != 0) continue;
        Integer r = static_cast<unsigned long>(x), m = ell;
        while (m <= target) {
          m *= m;
          Integer fv = eval_mod(c, r, m);
          Integer dv = eval_mod(deriv, r, m);
          Integer inv;
          mpz_invert(inv.get_mpz_t(), dv.get_mpz_t(), m.get_mpz_t());
          r = (r - fv * inv) % m;
          if (r < 0) r += m;
        }
        Integer num, den;
        if (!reconstruct(r, m, nb, db, num, den)) continue;
        if (homogeneous_zero(c, num, den)) roots.emplace_back(num, den);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace preper
