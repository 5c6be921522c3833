#include "preper/algebra/finite_field.hpp"

#include <stdexcept>
#include <string>

namespace preper {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

using Poly = std::vector<std::uint64_t>;  // over F_p, lowest first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t r = 1, e = p - 2;
  a %= p;
  while (e) {
    if (e & 1U) r = r * a % p;
    a = a * a % p;
    e >>= 1U;
  }
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  trim(r);
  return r;
}

Poly rem(Poly a, const Poly& m, std::uint64_t p) {
  trim(a);
  const std::uint64_t inv = inv_mod(m.back(), p);
  while (a.size() >= m.size()) {
    std::uint64_t c = a.back() * inv % p;
    std::size_t s = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) a[s + i] = (a[s + i] + p - c * m[i] % p) % p;
    trim(a);
  }
  return a;
}

Poly gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Poly powmod(Poly base, std::uint64_t e, const Poly& m, std::uint64_t p) {
  Poly r{1};
  base = rem(base, m, p);
  while (e) {
    if (e & 1U) r = rem(poly_mul(r, base, p), m, p);
    base = rem(poly_mul(base, base, p), m, p);
    e >>= 1U;
  }
  return r;
}

bool irreducible(const Poly& m, std::uint64_t p) {
  const std::size_t k = m.size() - 1;
  Poly xp{0, 1};
  for (std::size_t i = 1; i < k; ++i) {
    xp = powmod(xp, p, m, p);  // x^(p^i) mod m
    Poly d = xp;
    d.resize(std::max<std::size_t>(d.size(), 2));
    d[1] = (d[1] + p - 1) % p;
    trim(d);
    if (d.empty()) return false;
    if (gcd(m, d, p).size() > 1) return false;
  }
  return true;
}

Poly decode(std::uint64_t v, std::uint64_t p, unsigned k) {
  Poly r(k);
  for (unsigned i = 0; i < k; ++i) {
    r[i] = v % p;
    v /= p;
  }
  trim(r);
  return r;
}

std::uint64_t encode(const Poly& a, std::uint64_t p) {
  std::uint64_t v = 0;
  for (std::size_t i = a.size(); i-- > 0;) v = v * p + a[i];
  return v;
}

}  // namespace

FiniteField::FiniteField(std::uint64_t p, unsigned k) : p_(p), k_(k) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  if (k < 1 || k > 4) throw std::invalid_argument("extension degree must be in 1..4");
  q_ = 1;
  for (unsigned i = 0; i < k; ++i) q_ *= p;
  if (q_ > kMaxOrder) throw std::invalid_argument("field too large for table arithmetic");

  Poly m;
  if (k == 1) {
    m = {0, 1};
  } else {
    // Tuples (c_{k-1}, ..., c_0) in lex order = encodings in increasing order.
    for (std::uint64_t v = 0; v < q_; ++v) {
      Poly cand = decode(v, p, k);
      cand.resize(k + 1);
      cand[k] = 1;
      if (irreducible(cand, p)) {
        m = cand;
        break;
      }
    }
  }
  modulus_.assign(m.begin(), m.end());

  // Generator of the multiplicative group.
  std::vector<std::uint64_t> factors;
  {
    std::uint64_t n = q_ - 1;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) {
        factors.push_back(d);
        while (n % d == 0) n /= d;
      }
    if (n > 1) factors.push_back(n);
  }
  auto slow_mul = [&](std::uint64_t a, std::uint64_t b) {
    if (k == 1) return a * b % p;
    return encode(rem(poly_mul(decode(a, p, k), decode(b, p, k), p), m, p), p);
  };
  auto slow_pow = [&](std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1U) r = slow_mul(r, a);
      a = slow_mul(a, a);
      e >>= 1U;
    }
    return r;
  };
  std::uint64_t g = 1;
  if (q_ > 2) {
    for (g = 2; g < q_; ++g) {
      bool ok = true;
      for (auto f : factors)
        if (slow_pow(g, (q_ - 1) / f) == 1) {
          ok = false;
          break;
        }
      if (ok) break;
    }
  }
  exp_.assign(q_ - 1, 0);
  log_.assign(q_, 0);
  std::uint64_t x = 1;
  for (std::uint64_t i = 0; i + 1 < q_; ++i) {
    exp_[i] = static_cast<std::uint32_t>(x);
    log_[x] = static_cast<std::uint32_t>(i);
    x = slow_mul(x, g);
  }
  square_.assign(q_, 0);
  square_[0] = 1;
  for (std::uint64_t a = 1; a < q_; ++a) square_[mul(static_cast<FFElem>(a), static_cast<FFElem>(a))] = 1;
}

FFElem FiniteField::digitwise(FFElem a, FFElem b, bool subtract) const {
  FFElem r = 0, place = 1;
  for (unsigned i = 0; i < k_; ++i) {
    std::uint64_t x = a % p_, y = b % p_;
    a /= static_cast<FFElem>(p_);
    b /= static_cast<FFElem>(p_);
    std::uint64_t d = subtract ? (x + p_ - y) % p_ : (x + y) % p_;
    r += static_cast<FFElem>(d) * place;
    place *= static_cast<FFElem>(p_);
  }
  return r;
}

FFElem FiniteField::inv(FFElem a) const {
  if (a == 0) throw std::domain_error("inverse of zero in finite field");
  std::uint32_t l = log_[a];
  return exp_[l == 0 ? 0 : (q_ - 1) - l];
}

FFElem FiniteField::pow(FFElem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[(static_cast<unsigned __int128>(log_[a]) * e) % (q_ - 1)];
}

FFElem FiniteField::from_int(long v) const {
  long r = v % static_cast<long>(p_);
  if (r < 0) r += static_cast<long>(p_);
  return static_cast<FFElem>(r);
}

FFElem FiniteField::from_integer(const Integer& v) const {
  Integer P = static_cast<unsigned long>(p_);
  Integer r = v % P;
  if (r < 0) r += P;
  return static_cast<FFElem>(r.get_ui());
}

std::optional<FFElem> FiniteField::from_rational(const Rational& r) const {
  FFElem d = from_integer(r.den());
  if (d == 0) return std::nullopt;
  return div(from_integer(r.num()), d);
}

}  // namespace preper
