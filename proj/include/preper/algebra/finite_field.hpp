#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "preper/algebra/rational.hpp"

namespace preper {

bool is_prime(std::uint64_t n);

/// Element of F_q encoded as the integer sum c_i p^i of its coefficient
/// vector modulo the defining polynomial.
using FFElem = std::uint32_t;

/// F_{p^k} with log/exp tables. The defining polynomial is the first monic
/// irreducible of degree k when coefficient tuples (c_{k-1}, ..., c_0) are
/// taken in increasing lexicographic order; for k = 1 it is x.
class FiniteField {
 public:
  static constexpr std::uint64_t kMaxOrder = 1U << 20;

  FiniteField(std::uint64_t p, unsigned k);

  std::uint64_t characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  std::uint64_t order() const { return q_; }
  /// Monic modulus, lowest coefficient first (length k + 1).
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  FFElem generator() const { return exp_[1 % (q_ - 1)]; }

  FFElem add(FFElem a, FFElem b) const {
    if (k_ == 1) {
      std::uint32_t s = a + b;
      return s >= p_ ? s - static_cast<std::uint32_t>(p_) : s;
    }
    return digitwise(a, b, false);
  }
  FFElem sub(FFElem a, FFElem b) const {
    if (k_ == 1) return a >= b ? a - b : static_cast<std::uint32_t>(a + p_ - b);
    return digitwise(a, b, true);
  }
  FFElem neg(FFElem a) const { return sub(0, a); }
  FFElem mul(FFElem a, FFElem b) const {
    if (a == 0 || b == 0) return 0;
    std::uint32_t s = log_[a] + log_[b];
    if (s >= q_ - 1) s -= static_cast<std::uint32_t>(q_ - 1);
    return exp_[s];
  }
  FFElem inv(FFElem a) const;
  FFElem div(FFElem a, FFElem b) const { return mul(a, inv(b)); }
  FFElem pow(FFElem a, std::uint64_t e) const;
  bool is_square(FFElem a) const { return square_[a] != 0; }
  /// 0, 1 or -1 (the quadratic character); p must be odd.
  int chi(FFElem a) const { return a == 0 ? 0 : (square_[a] ? 1 : -1); }

  FFElem from_int(long v) const;
  FFElem from_integer(const Integer& v) const;
  std::optional<FFElem> from_rational(const Rational& r) const;
  /// Elements of the prime subfield map to themselves, others to nullopt.
  std::optional<std::uint64_t> to_prime(FFElem a) const {
    return a < p_ ? std::optional<std::uint64_t>(a) : std::nullopt;
  }

 private:
  FFElem digitwise(FFElem a, FFElem b, bool subtract) const;

  std::uint64_t p_;
  unsigned k_;
  std::uint64_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> exp_, log_;
  std::vector<std::uint8_t> square_;
};

}  // namespace preper
