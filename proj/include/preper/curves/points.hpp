#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "preper/algebra/kernel.hpp"
#include "preper/curves/model.hpp"

namespace preper {

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr std::uint64_t kDefaultEnumerationBudget = 1ULL << 24;

/// Every F_q-point of the model, normalised. Affine models scan F_q^n,
/// projective ones scan P^(n-1)(F_q), weighted ones the charts Z = 1 and
/// (X, Z) = (1, 0). Throws BudgetExceeded when the scan would pass `budget`.
std::vector<FPoint> enumerate_points(const CurveModel& c, const FiniteField& k,
                                     std::uint64_t budget = kDefaultEnumerationBudget,
                                     Kernel kernel = Kernel::openmp);

/// Number of points of the projective model over F_q by enumeration.
std::uint64_t count_points(const CurveModel& c, std::uint64_t p, unsigned k = 1,
                           std::uint64_t budget = kDefaultEnumerationBudget, Kernel kernel = Kernel::openmp);

/// #H(F_q) as the character sum sum_x (1 + chi(f(x))) plus the points at
/// infinity: one for odd degree, 1 + chi(lc f) for even degree. p must be odd
/// and must not divide the leading coefficient.
std::uint64_t count_points(const HyperellipticModel& h, std::uint64_t p, unsigned k = 1,
                           Kernel kernel = Kernel::openmp);

/// #E(F_q) including the point at infinity; p must not divide a denominator.
std::uint64_t count_points(const EllipticCurveW& e, std::uint64_t p, unsigned k = 1, Kernel kernel = Kernel::openmp);

/// Numerator L(T) = 1 + a_1 T + ... + a_2g T^2g of the zeta function of H over F_p.
struct LPolynomial {
  std::uint64_t p = 0;
  int genus = 0;
  std::vector<Integer> a;  // a[0] = 1

  Integer at_one() const;
  /// #H(F_{p^k}) predicted by L.
  Integer predicted_count(unsigned k) const;
};

struct BadReduction : std::domain_error {
  using std::domain_error::domain_error;
};

/// Throws BadReduction when p = 2, p | lc(f), p divides a denominator of f,
/// or disc(f) = 0 mod p.
void require_good_reduction(const HyperellipticModel& h, std::uint64_t p);

/// L-polynomial from N_1..N_g via Newton's identities and a_{2g-i} = p^(g-i) a_i.
LPolynomial l_polynomial(const HyperellipticModel& h, std::uint64_t p, Kernel kernel = Kernel::openmp);
/// #J(F_p) = L(1).
Integer jacobian_order(const HyperellipticModel& h, std::uint64_t p, Kernel kernel = Kernel::openmp);

}  // namespace preper
