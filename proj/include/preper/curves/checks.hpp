#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "preper/curves/model.hpp"

namespace preper {

/// v^2 = f mod u. A constant u is the identity divisor and always passes.
bool mumford_consistency(const QPoly& u, const QPoly& v, const QPoly& f);

struct ReductionReport {
  std::uint64_t p = 0;
  std::vector<FPoint> fp_points;
  std::vector<FPoint> reductions;  // distinct reductions of the known points
  std::vector<std::string> unreducible;
  bool all_on_curve = true;        // every reduction is an F_p point
  bool exhausts = false;           // the reductions are all of the F_p points
  std::string to_string() const;
};

/// Reduces the known rational points mod p and compares with the full
/// F_p point set of the model.
ReductionReport reduction_injection_report(const CurveModel& c, std::uint64_t p, const std::vector<QPoint>& known);

struct SingularReport {
  std::uint64_t p = 0;
  std::string strategy;
  bool complete = true;  // every F_p point was examined
  std::size_t examined = 0;
  std::vector<FPoint> singular;
};

/// Jacobian criterion at every F_p point: a curve in n-dimensional ambient
/// space is singular where the Jacobian of its equations has rank < n - 1.
SingularReport singular_locus_fp(const CurveModel& c, std::uint64_t p);

/// The same test at the images of `cover` F_p points under `embedding`
/// (polynomials in the cover's variables); partial by construction.
SingularReport singular_points_via_images(const CurveModel& c, const CurveModel& cover,
                                          const std::vector<MPoly>& embedding, std::uint64_t p);

/// Rank of the Jacobian matrix of the model's equations at an F_q point.
std::size_t jacobian_rank(const CurveModel& c, const FPoint& pt, const FiniteField& k);

}  // namespace preper
