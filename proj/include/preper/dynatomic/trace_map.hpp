#pragma once

#include <optional>
#include <vector>

#include "preper/algebra/kernel.hpp"
#include "preper/algebra/mpoly.hpp"
#include "preper/algebra/unipoly.hpp"

namespace preper {

/// Phi*_{a,3} / ((a+1)^2 z (z-1)) in Q[a][z], the primitive cubic factor.
QQPoly reduced_p3();
/// Phi*_{a,4} / (a+1)^4 in Q[a][z]. Throws std::logic_error if inexact.
QQPoly reduced_p4();

/// P_4 and the trace z + phi(z) + phi^2(z) + phi^3(z) = num / den of phi_a,
/// with den the reduced common denominator of the iterates.
struct TraceMapData {
  QQPoly p4;
  QQPoly num, den;
};
TraceMapData trace_map_data();


/// Res_z(P_4(a, z), den(a, z) t - num(a, z)) at every integer pair (as[i], ts[j]),
/// row-major in i, for the integer-scaled forms of P_4, num and den. Formal
/// z-degrees are kept, so values agree with the specialised bivariate resultant.
std::vector<Integer> resultant_grid(const TraceMapData& d, const std::vector<long>& as, const std::vector<long>& ts,
                                    Kernel kernel);

struct TraceMapResult {
  TraceMapData data;
  MPoly resultant;  ///< in (a, t) = (x0, x1)
  int degree_bound_a = 0;
  int degree_bound_t = 0;
  std::size_t samples = 0;
  std::optional<MPoly> quotient;  ///< resultant / factor when exact
};

/// Interpolates Res_z(P_4, B t - A) from grid samples and divides by `factor`
/// (a polynomial in a = x0, t = x1).
TraceMapResult trace_map_quotient(const MPoly& factor, Kernel kernel = Kernel::openmp);

}  // namespace preper
