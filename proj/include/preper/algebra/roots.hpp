#pragma once

#include <vector>

#include "preper/algebra/unipoly.hpp"

namespace preper {

/// All rational roots of p, ascending, each listed once. Throws
/// std::domain_error("identically zero") for p = 0.
std::vector<Rational> rational_roots(const QPoly& p);

/// Coefficients of the primitive integer form of p.
std::vector<Integer> integer_coefficients(const QPoly& p);

}  // namespace preper
