#include "preper/curves/curve_map.hpp"

#include <algorithm>

#include "preper/curves/points.hpp"

namespace preper {

namespace {

std::string prefix(const CurveMap& m) { return m.name + ": "; }

}  // namespace

std::optional<QPoint> apply(const CurveMap& m, const QPoint& p) {
  QPoint out;
  if (m.target.ambient == Ambient::affine) {
    for (const auto& c : m.coords) {
      Rational d = c.den.evaluate(p);
      if (d.is_zero()) return std::nullopt;
      out.push_back(c.num.evaluate(p) / d);
    }
    return out;
  }
  bool all_zero = true;
  for (const auto& c : m.coords) {
    Rational d = c.den.evaluate(p);
    if (d.is_zero()) return std::nullopt;
    out.push_back(c.num.evaluate(p) / d);
    all_zero = all_zero && out.back().is_zero();
  }
  if (all_zero) return std::nullopt;
  // [0 : Y : 0] lies on no hyperelliptic model: this coordinate formula fails there.
  if (m.target.ambient == Ambient::weighted && out[0].is_zero() && out[2].is_zero()) return std::nullopt;
  return out;
}

MapReport verify_curve_map(const CurveMap& m, const std::vector<std::uint64_t>& primes,
                           const std::vector<MapPointPair>& pairs) {
  MapReport r;
  auto fail = [&](std::string msg) {
    r.ok = false;
    r.failures.push_back(prefix(m) + std::move(msg));
  };
  if (m.coords.size() != m.target.dimension()) {
    fail("map has " + std::to_string(m.coords.size()) + " coordinates, target needs " +
         std::to_string(m.target.dimension()));
    return r;
  }

  // (i) listed correspondences over Q.
  for (const auto& pr : pairs) {
    const std::string ps = point_to_string(pr.source, m.source.ambient);
    if (!on_curve(m.source, pr.source)) {
      fail("source point " + ps + " is not on " + m.source.name);
      continue;
    }
    auto img = preper::apply(m, pr.source);
    if (!img) {
      r.indeterminate.push_back(pr.source);
      if (pr.image) fail(ps + " is indeterminate but should map to " + point_to_string(*pr.image, m.target.ambient));
      continue;
    }
    const std::string is = point_to_string(normalize(m.target, *img), m.target.ambient);
    if (!on_curve(m.target, *img)) fail("image " + is + " of " + ps + " is not on " + m.target.name);
    if (!pr.image) {
      fail(ps + " should be indeterminate but maps to " + is);
    } else if (!same_point(m.target, *img, *pr.image)) {
      fail(ps + " maps to " + is + ", expected " + point_to_string(*pr.image, m.target.ambient));
    }
  }

  // (iii) recorded indeterminacy.
  for (const auto& q : m.indeterminacy) {
    const std::string qs = point_to_string(q, m.source.ambient);
    if (!on_curve(m.source, q)) fail("recorded indeterminacy point " + qs + " is not on the source");
    if (preper::apply(m, q)) fail("recorded indeterminacy point " + qs + " has a defined image");
  }
  for (const auto& q : r.indeterminate) {
    bool recorded = std::any_of(m.indeterminacy.begin(), m.indeterminacy.end(),
                                [&](const QPoint& x) { return same_point(m.source, x, q); });
    if (!recorded) fail("indeterminate point " + point_to_string(q, m.source.ambient) + " is not recorded");
  }

  // (ii) every F_p point of the source.
  for (auto p : primes) {
    FiniteField k(p, 1);
    std::vector<std::pair<FqPoly, FqPoly>> cs;
    try {
      for (const auto& c : m.coords) cs.emplace_back(FqPoly(c.num, k), FqPoly(c.den, k));
    } catch (const std::domain_error& e) {
      fail("p = " + std::to_string(p) + ": " + e.what());
      continue;
    }
    std::vector<FPoint> pts;
    try {
      pts = enumerate_points(m.source, k);
    } catch (const BudgetExceeded& e) {
      fail("p = " + std::to_string(p) + ": " + e.what());
      continue;
    }
    std::size_t checked = 0, skipped = 0;
    for (const auto& pt : pts) {
      FPoint img;
      bool undefined = false, all_zero = true;
      for (const auto& [num, den] : cs) {
        FFElem d = den(pt);
        if (d == 0) {
          undefined = true;
          break;
        }
        img.push_back(k.div(num(pt), d));
        all_zero = all_zero && img.back() == 0;
      }
      if (!undefined && m.target.ambient == Ambient::weighted) all_zero = img[0] == 0 && img[2] == 0;
      if (undefined || (m.target.ambient != Ambient::affine && all_zero)) {
        ++skipped;
        continue;
      }
      ++checked;
      if (!on_curve(m.target, img, k))
        fail("p = " + std::to_string(p) + ": " + point_to_string(pt, m.source.ambient, k) + " maps to " +
             point_to_string(img, m.target.ambient, k) + ", not on " + m.target.name);
    }
    r.checked[p] = checked;
    r.skipped[p] = skipped;
    if (checked == 0) r.notes.push_back(prefix(m) + "no F_" + std::to_string(p) + " point outside the indeterminacy");
  }
  return r;
}

}  // namespace preper
