#pragma once

#include <string>
#include <vector>

#include "preper/curves/model.hpp"

namespace preper {

/// Transcribed data for the genus 6 curve C and its canonical model D.
/// Polynomials in (u, v) use x0 = u, x1 = v; the quartic uses x0 = z, x1 = t;
/// quadrics use w1..w6 as x0..x5.
struct AppendixData {
  MPoly quartic;                   // in z, t
  MPoly F;                         // in u, v
  std::vector<MPoly> differentials;  // g_1..g_6 in u, v
  std::vector<MPoly> quadrics;       // six quadrics in w1..w6
  std::vector<QPoint> c_points;      // rational points of C
  std::vector<QPoint> d_points;      // the nine points of D
  std::vector<QPoint> d_images;      // their images on the closure of C, [u : v : 1] or at infinity
};

const AppendixData& appendix_data();

PlaneCurveModel appendix_curve_c();
SpaceCurveModel appendix_curve_d();

struct AppendixDerivation {
  MPoly twofold;           // (t - 1) N_2 + (t + 1) D_2 from phi_t o phi_t
  MPoly twofold_cofactor;  // twofold / quartic, free of z
  bool quartic_matches = false;
  MPoly substituted;       // numerator after t = (u+1)/(u-1), z = 1/(1-v)
  std::string stripped;    // the factors removed, e.g. "-16 u^2 (u - 1)^3"
  int sign = 0;            // substituted = sign * |c| * stripped factors * F
  bool curve_matches = false;
  MPoly involution_numerator;  // numerator of F(u, 1/u - 1 - u - v), the involution as displayed
  bool involution_divides = false;
  // v -> c(u) - v with c half the sum of the v-roots of F; the only
  // candidate of that shape.
  RatFunc root_involution_shift;
  bool root_involution_divides = false;
  std::string difference;  // nonempty on failure
  bool ok() const { return quartic_matches && curve_matches && involution_divides; }
};

AppendixDerivation derive_appendix_curve(const AppendixData& d = appendix_data());

struct EmbeddingReport {
  std::vector<bool> quadric_divisible;  // one per quadric
  struct PointImage {
    QPoint c_point;
    std::optional<QPoint> image;     // empty when every g_i vanishes
    int d_index = -1;                // index into d_points, -1 if not listed
  };
  std::vector<PointImage> points;
  bool ok() const;
};

/// Q_j(g_1, ..., g_6) divisible by F for every j, and the images of the
/// listed points of C under (g_i) among the listed points of D.
EmbeddingReport verify_canonical_embedding(const AppendixData& d = appendix_data());

struct LineCheck {
  std::vector<FPoint> line_points;
  std::vector<FPoint> on_curve;
  bool empty() const { return on_curve.empty(); }
};

/// The line w1 + w4 = w2 - w4 = w5 = w6 = 0 in P^5(F_5) against the quadrics.
LineCheck line_intersection_empty_check(const std::vector<MPoly>& quadrics = appendix_data().quadrics);

}  // namespace preper
