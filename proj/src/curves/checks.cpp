#include "preper/curves/checks.hpp"

#include <algorithm>
#include <sstream>

#include "preper/curves/points.hpp"

namespace preper {

bool mumford_consistency(const QPoly& u, const QPoly& v, const QPoly& f) {
  if (u.is_zero()) return false;
  if (u.degree() == 0) return true;
  return divmod(v * v - f, u).second.is_zero();
}

std::string ReductionReport::to_string() const {
  std::ostringstream os;
  os << reductions.size() << " reductions, " << fp_points.size() << " points over F_" << p
     << (exhausts ? ", all accounted for" : ", not exhausted");
  if (!all_on_curve) os << ", some reductions off the curve";
  if (!unreducible.empty()) os << ", " << unreducible.size() << " without reduction";
  return os.str();
}

ReductionReport reduction_injection_report(const CurveModel& c, std::uint64_t p, const std::vector<QPoint>& known) {
  FiniteField k(p, 1);
  ReductionReport r;
  r.p = p;
  r.fp_points = enumerate_points(c, k);
  for (const auto& q : known) {
    auto red = reduce_point(c, q, k);
    if (!red) {
      r.unreducible.push_back(point_to_string(q, c.ambient));
      continue;
    }
    FPoint n = normalize(c, *red, k);
    if (!std::binary_search(r.fp_points.begin(), r.fp_points.end(), n)) r.all_on_curve = false;
    if (std::find(r.reductions.begin(), r.reductions.end(), n) == r.reductions.end()) r.reductions.push_back(n);
  }
  std::sort(r.reductions.begin(), r.reductions.end());
  r.exhausts = r.all_on_curve && r.reductions == r.fp_points;
  return r;
}

std::size_t jacobian_rank(const CurveModel& c, const FPoint& pt, const FiniteField& k) {
  const std::size_t n = c.dimension();
  std::vector<std::vector<FFElem>> m;
  for (const auto& e : c.equations) {
    std::vector<FFElem> row;
    for (std::size_t j = 0; j < n; ++j) row.push_back(FqPoly(e.derivative(j), k)(pt));
    m.push_back(std::move(row));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < m.size(); ++col) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    FFElem inv = k.inv(m[rank][col]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == rank || m[i][col] == 0) continue;
      FFElem f = k.mul(m[i][col], inv);
      for (std::size_t j = col; j < n; ++j) m[i][j] = k.sub(m[i][j], k.mul(f, m[rank][j]));
    }
    ++rank;
  }
  return rank;
}

namespace {

std::size_t smooth_rank(const CurveModel& c) {
  const std::size_t ambient_dim = c.ambient == Ambient::affine ? c.dimension() : c.dimension() - 1;
  return ambient_dim - 1;
}

}  // namespace

SingularReport singular_locus_fp(const CurveModel& c, std::uint64_t p) {
  FiniteField k(p, 1);
  SingularReport r;
  r.p = p;
  r.strategy = "all points of the ambient space";
  auto pts = enumerate_points(c, k);
  r.examined = pts.size();
  for (const auto& pt : pts)
    if (jacobian_rank(c, pt, k) < smooth_rank(c)) r.singular.push_back(pt);
  return r;
}

SingularReport singular_points_via_images(const CurveModel& c, const CurveModel& cover,
                                          const std::vector<MPoly>& embedding, std::uint64_t p) {
  FiniteField k(p, 1);
  SingularReport r;
  r.p = p;
  r.strategy = "images of " + cover.name + " points";
  r.complete = false;
  std::vector<FqPoly> emb;
  for (const auto& e : embedding) emb.emplace_back(e, k);
  std::vector<FPoint> seen;
  for (const auto& src : enumerate_points(cover, k)) {
    FPoint img;
    for (const auto& e : emb) img.push_back(e(src));
    if (std::all_of(img.begin(), img.end(), [](FFElem x) { return x == 0; })) continue;
    img = normalize(c, img, k);
    if (std::find(seen.begin(), seen.end(), img) != seen.end()) continue;
    seen.push_back(img);
    if (!on_curve(c, img, k)) continue;
    ++r.examined;
    if (jacobian_rank(c, img, k) < smooth_rank(c)) r.singular.push_back(img);
  }
  return r;
}

}  // namespace preper
