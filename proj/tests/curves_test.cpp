#include <cmath>
#include <set>

#include "doctest.h"
#include "preper/algebra/parser.hpp"
#include "preper/algebra/resultant.hpp"
#include "preper/curves/appendix.hpp"
#include "preper/curves/checks.hpp"
#include "preper/curves/elliptic.hpp"
#include "preper/curves/points.hpp"
#include "preper/curves/registry.hpp"
#include "preper/dynatomic/families.hpp"
#include "test_util.hpp"

using namespace preper;
using testutil::qpoly;

namespace {

const CurveRegistry& reg() { return curve_registry(); }

QPoint pt(std::initializer_list<long> xs) {
  QPoint p;
  for (long x : xs) p.push_back(Rational(x));
  return p;
}

// Naive count of y^2 = f(x) over F_q, looping over all (x, y) pairs, plus
// the infinite points from the homogenised top coefficients.
std::uint64_t naive_hyperelliptic_count(const QPoly& f, std::uint64_t p, unsigned k) {
  FiniteField K(p, k);
  std::vector<FFElem> c;
  for (int i = 0; i <= f.degree(); ++i) c.push_back(*K.from_rational(f.coeff(i)));
  auto eval = [&](FFElem x) {
    FFElem acc = 0;
    for (int i = f.degree(); i >= 0; --i) acc = K.add(K.mul(acc, x), c[i]);
    return acc;
  };
  std::uint64_t n = 0;
  for (FFElem x = 0; x < K.order(); ++x)
    for (FFElem y = 0; y < K.order(); ++y)
      if (K.mul(y, y) == eval(x)) ++n;
  if (f.degree() % 2 == 1) return n + 1;
  for (FFElem y = 0; y < K.order(); ++y)
    if (K.mul(y, y) == c.back()) ++n;
  return n;
}

}  // namespace

TEST_CASE("every listed rational point lies on its curve") {
  std::size_t total = 0;
  for (const auto& c : reg().curves)
    for (const auto& p : c.points) {
      CAPTURE(c.id);
      CAPTURE(point_to_string(p, c.model.ambient));
      CHECK(on_curve(c.model, p));
      ++total;
    }
  CHECK(total >= 45);
}

TEST_CASE("on_curve for F(u, v)") {
  const auto c = appendix_curve_c().affine();
  for (auto p : {pt({-1, 0}), pt({1, 1}), pt({-1, 1}), pt({0, 0}), pt({0, 1})}) CHECK(on_curve(c, p));
  // F(2, 2) term by term: 128 + 256 - 64 - 32 + 128 - 128 + 8 + 64 - 128 + 24 - 32 + 32 - 2 + 4 - 2
  CHECK(appendix_data().F.evaluate(pt({2, 2})) == Rational(256));
  CHECK_FALSE(on_curve(c, pt({2, 2})));
  CHECK_THROWS_AS(on_curve(c, pt({1, 1, 1})), std::invalid_argument);
  const auto d = appendix_curve_d().model();
  CHECK(on_curve(d, pt({-2, 1, 0, 0, 0, 0})));
  CHECK_THROWS_AS(on_curve(d, pt({0, 0, 0, 0, 0, 0})), std::invalid_argument);
}

TEST_CASE("hyperelliptic counts and Jacobian orders") {
  const auto& x3 = *reg().curve("X3.H").hyperelliptic;
  CHECK(count_points(x3, 3) == 6);
  CHECK(count_points(x3.model(), 3) == 6);
  CHECK(jacobian_order(x3, 3) == 19);

  const auto& h1 = reg().curve("N3H1.H");
  CHECK(h1.hyperelliptic->genus() == 3);
  CHECK(count_points(*h1.hyperelliptic, 5) == 6);
  CHECK(jacobian_order(*h1.hyperelliptic, 5) == 144);
  FiniteField f5(5, 1);
  auto pts = enumerate_points(h1.model, f5);
  std::vector<FPoint> listed;
  for (const auto& q : h1.points_f5) listed.push_back(normalize(h1.model, *reduce_point(h1.model, q, f5), f5));
  std::sort(listed.begin(), listed.end());
  CHECK(pts == listed);

  const auto& m1 = *reg().curve("N3M1.H").hyperelliptic;
  Integer j = jacobian_order(m1, 3);
  CHECK(j % 15 == 0);
}

TEST_CASE("F_9 count against a naive double loop") {
  const auto& x3 = *reg().curve("X3.H").hyperelliptic;
  auto naive = naive_hyperelliptic_count(x3.f, 3, 2);
  CHECK(count_points(x3, 3, 2) == naive);
  CHECK(count_points(x3.model(), 3, 2) == naive);
  CHECK(l_polynomial(x3, 3).predicted_count(2) == naive);
}

TEST_CASE("zeta prediction over F_{p^(g+1)} matches a direct count") {
  for (const char* id : {"X3.H", "N3M1.H", "N3M3.H"}) {
    const auto& h = *reg().curve(id).hyperelliptic;
    auto L = l_polynomial(h, 3);
    CAPTURE(id);
    Integer pk = 1;
    for (int i = h.genus(); i >= 0; --i, pk *= 3) CHECK(L.a[2 * h.genus() - i] == L.a[i] * pk);
    CHECK(L.predicted_count(h.genus() + 1) == count_points(h, 3, h.genus() + 1));
  }
  const auto& h1 = *reg().curve("N3H1.H").hyperelliptic;
  CHECK(l_polynomial(h1, 5).predicted_count(4) == count_points(h1, 5, 4));
}

TEST_CASE("Hasse-Weil bound") {
  for (const auto& c : reg().curves) {
    if (!c.hyperelliptic && !c.elliptic) continue;
    for (std::uint64_t p : {3, 5, 7, 11, 13}) {
      std::uint64_t n;
      int g;
      if (c.hyperelliptic) {
        try {
          require_good_reduction(*c.hyperelliptic, p);
        } catch (const BadReduction&) {
          continue;
        }
        n = count_points(*c.hyperelliptic, p);
        g = c.hyperelliptic->genus();
      } else {
        if (c.elliptic->discriminant().num() % static_cast<unsigned long>(p) == 0) continue;
        n = count_points(*c.elliptic, p);
        g = 1;
      }
      CAPTURE(c.id);
      CAPTURE(p);
      CHECK(std::abs(static_cast<double>(n) - static_cast<double>(p + 1)) <= 2 * g * std::sqrt(double(p)) + 1e-9);
    }
  }
}

TEST_CASE("bad reduction is refused") {
  const auto& x3 = *reg().curve("X3.H").hyperelliptic;
  CHECK_THROWS_AS(jacobian_order(x3, 2), BadReduction);
  HyperellipticModel h("t", qpoly("x^5 + 3*x + 3"));
  CHECK_THROWS_AS(require_good_reduction(h, 3), BadReduction);
}

TEST_CASE("genus one: Jacobian order equals the point count") {
  HyperellipticModel h("e", qpoly("x^3 + x + 1"));
  for (std::uint64_t p : {5, 7, 11, 13}) CHECK(jacobian_order(h, p) == count_points(h, p));
  EllipticCurveW e("e", 0, 0, 0, 1, 1);
  for (std::uint64_t p : {5, 7, 11, 13}) CHECK(count_points(e, p) == count_points(h, p));
}

TEST_CASE("torsion orders") {
  CHECK(ec_order_of_point(*reg().curve("19a3").elliptic, ECPoint::affine(0, 0)).order == 3);
  CHECK(ec_order_of_point(*reg().curve("11a3").elliptic, ECPoint::affine(0, 0)).order == 5);
  CHECK(ec_order_of_point(*reg().curve("17a4").elliptic, ECPoint::affine(0, 0)).order == 4);
  auto t = ec_order_of_point(*reg().curve("53a1").elliptic, ECPoint::affine(0, 0));
  CHECK_FALSE(t.order.has_value());
  CHECK(t.to_string().find("12") != std::string::npos);
  CHECK_THROWS_AS(ec_order_of_point(*reg().curve("53a1").elliptic, ECPoint::affine(1, 5)), std::invalid_argument);
}

TEST_CASE("group law: associativity and orders dividing #E(F_p)") {
  for (const char* id : {"19a3", "11a3", "17a4", "53a1", "19a1"}) {
    const auto& c = reg().curve(id);
    const auto& e = *c.elliptic;
    std::vector<ECPoint> base;
    for (const auto& p : c.points) base.push_back(ECPoint::from_projective(p));
    std::vector<ECPoint> sample;
    for (const auto& b : base)
      for (long n = -2; n <= 2; ++n) sample.push_back(multiply(e, b, n));
    for (const auto& P : sample) CHECK(on_curve(e, P));
    for (std::size_t i = 0; i < sample.size(); i += 2)
      for (std::size_t j = 1; j < sample.size(); j += 3)
        for (std::size_t k = 0; k < sample.size(); k += 4) {
          const auto &P = sample[i], &Q = sample[j], &R = sample[k];
          CHECK(add(e, add(e, P, Q), R) == add(e, P, add(e, Q, R)));
        }
    for (const auto& b : base) {
      auto ord = ec_order_of_point(e, b).order;
      if (!ord) continue;
      for (std::uint64_t p : {5, 7, 11, 13}) {
        if (e.discriminant().num() % static_cast<unsigned long>(p) == 0) continue;
        CAPTURE(id);
        CAPTURE(p);
        CHECK(count_points(e, p) % static_cast<std::uint64_t>(*ord) == 0);
      }
    }
  }
}

TEST_CASE("Mumford representations") {
  const auto& m2 = reg().curve("N3M2.H");
  REQUIRE_FALSE(m2.mumford.empty());
  for (const auto& [u, v] : m2.mumford) CHECK(mumford_consistency(u, v, m2.hyperelliptic->f));
  CHECK(mumford_consistency(qpoly("x^2 - x + 1"), qpoly("x - 1"), m2.hyperelliptic->f));
  CHECK(mumford_consistency(qpoly("x^2 - x + 1"), qpoly("-x + 1"), m2.hyperelliptic->f));
  CHECK(mumford_consistency(qpoly("1"), qpoly("0"), m2.hyperelliptic->f));
  CHECK_FALSE(mumford_consistency(qpoly("x^2 - x + 1"), qpoly("x"), m2.hyperelliptic->f));
}

TEST_CASE("reduction injection") {
  const auto& m1 = reg().curve("N3M1.H");
  auto r = reduction_injection_report(m1.model, 3, m1.points);
  CHECK(r.fp_points.size() == 5);
  CHECK(r.reductions.size() == 5);
  CHECK(r.exhausts);

  const auto& x3 = reg().curve("X3.H");
  auto r3 = reduction_injection_report(x3.model, 3, x3.points);
  CHECK(r3.fp_points.size() == 6);
  CHECK(r3.exhausts);

  const auto& h1 = reg().curve("N3H1.H");
  auto r5 = reduction_injection_report(h1.model, 5, h1.points);
  CHECK(r5.fp_points.size() == 6);
  CHECK(r5.reductions.size() == 5);
  CHECK(r5.all_on_curve);
  CHECK_FALSE(r5.exhausts);
}

TEST_CASE("curve maps") {
  for (const auto& m : reg().maps) {
    CAPTURE(m.map.name);
    auto c = check_map_entry(reg(), m);
    for (const auto& f : c.report.failures) MESSAGE(f);
    for (const auto& f : c.unlisted_images) MESSAGE(f);
    CHECK(c.ok());
    CHECK(c.report.checked.size() >= 2);
  }
  auto r = check_map_entry(reg(), reg().map("N3E1.psi")).report;
  std::set<std::string> ind;
  for (const auto& p : r.indeterminate) ind.insert(point_to_string(p, Ambient::projective));
  CHECK(ind.count(point_to_string(pt({0, 1, 0}), Ambient::projective)));
  CHECK(ind.count(point_to_string(pt({1, 0, 1}), Ambient::projective)));

  const auto& dc = reg().map("APP.DtoC").map;
  auto img = preper::apply(dc, pt({0, 0, 1, 0, 0, 1}));
  REQUIRE(img);
  CHECK(same_point(dc.target, *img, pt({1, 1, 1})));
}

TEST_CASE("identity map passes trivially") {
  const auto& c = reg().curve("N3E1.C");
  CurveMap id{"id", c.model, c.model, {}, {}};
  for (std::size_t i = 0; i < 3; ++i) id.coords.push_back(RatFunc(MPoly::variable(i)));
  std::vector<MapPointPair> pairs;
  for (const auto& p : c.points) pairs.push_back({p, p});
  CHECK(verify_curve_map(id, {5, 7}, pairs).ok);
}

TEST_CASE("a wrong map is caught") {
  auto m = reg().map("N3E1.psi").map;
  m.coords[1] = RatFunc(m.coords[1].num + MPoly::variable(2) * MPoly::variable(2));
  CHECK_FALSE(verify_curve_map(m, {7, 11}, {}).ok);
}

TEST_CASE("appendix derivation") {
  auto d = derive_appendix_curve();
  MESSAGE(d.difference);
  CHECK(d.quartic_matches);
  CHECK(d.curve_matches);
  CHECK(d.sign != 0);
  // The displayed involution (u, 1/u - 1 - u - v) does not preserve F; the
  // root-sum involution (u, 1/u + 1 - u - v) does.
  CHECK_FALSE(d.involution_divides);
  CHECK_FALSE(d.ok());
  CHECK(d.root_involution_divides);
  const MPoly u = MPoly::variable(0);
  CHECK(d.root_involution_shift.num * u == (1 + u - u * u) * d.root_involution_shift.den);
  // z^4 coefficient of the quartic: 16 t^2 (t + 1)
  const auto& q = appendix_data().quartic;
  MPoly lead;
  for (const auto& [e, c] : q.terms())
    if (e.size() > 0 && e[0] == 4) lead += MPoly::monomial({0, e.size() > 1 ? e[1] : 0u}, c);
  CHECK(lead == parse_polynomial("16*t^2*(t+1)", {"z", "t"}));
}

namespace {

MPoly coefficient_in_u(const MPoly& g, std::uint32_t d) {
  MPoly out;
  for (const auto& [e, c] : g.terms())
    if (e.size() > 0 && e[0] == d) out.add_term({0, e.size() > 1 ? e[1] : 0u}, c);
  return out;
}

// Pseudo-division of g by F in u over Q[v]: lc^k g = q F + r. Since F is
// irreducible and does not divide lc, F | g iff r = 0.
bool divisible_by_pseudo_division(MPoly g, const MPoly& F) {
  const std::uint32_t df = F.degree_in(0);
  MPoly lc = coefficient_in_u(F, df);
  while (!g.is_zero() && static_cast<std::uint32_t>(g.degree_in(0)) >= df) {
    std::uint32_t dg = g.degree_in(0);
    MPoly lg = coefficient_in_u(g, dg);
    MPoly shift = MPoly::monomial({dg - df, 0}, Rational(1));
    g = lc * g - lg * shift * F;
  }
  return g.is_zero();
}

}  // namespace

TEST_CASE("canonical embedding") {
  auto r = verify_canonical_embedding();
  REQUIRE(r.quadric_divisible.size() == 6);
  for (bool b : r.quadric_divisible) CHECK(b);
  CHECK(r.ok());
  const auto& d = appendix_data();
  for (const auto& q : d.quadrics) CHECK(divisible_by_pseudo_division(q.compose(d.differentials), d.F));
  // (0, 0) on C lands among the listed points of D
  bool found = false;
  for (const auto& p : r.points)
    if (p.c_point[0] == 0 && p.c_point[1] == 0 && p.image) found = p.d_index >= 0;
  CHECK(found);
  // perturbed quadric fails
  CHECK_FALSE(exact_quotient((d.quadrics[0] + MPoly::variable(0) * MPoly::variable(0)).compose(d.differentials), d.F));
}

TEST_CASE("D over F_5 and the line") {
  const auto d = appendix_curve_d().model();
  CHECK(count_points(d, 5) == 9);
  auto lc = line_intersection_empty_check();
  CHECK(lc.line_points.size() == 6);
  CHECK(lc.empty());
  auto bad = appendix_data().quadrics;
  // vanish on the whole line: every quadric replaced by w5 * (something)
  for (auto& q : bad) q = MPoly::variable(4) * MPoly::variable(0);
  CHECK_FALSE(line_intersection_empty_check(bad).empty());
}

TEST_CASE("singular points of D") {
  const auto d = appendix_curve_d().model();
  auto s3 = singular_locus_fp(d, 3);
  CHECK(s3.complete);
  CHECK(s3.singular.size() >= 1);
  auto s7 = singular_locus_fp(d, 7);
  CHECK(s7.examined > 0);
  CHECK(s7.singular.empty());
  auto s53 = singular_points_via_images(d, appendix_curve_c().affine(), appendix_data().differentials, 53);
  CHECK_FALSE(s53.complete);
  CHECK(s53.examined > 0);
  const auto e = reg().curve("11a3").elliptic->model();
  CHECK(singular_locus_fp(e, 7).singular.empty());
}

TEST_CASE("discriminant chain for the preimage curve") {
  auto pc = preimage_curve(family('D'), qpoly("-x"), qpoly("x - 1"));
  CHECK(pc.discriminant == qpoly("x^6 - 16*x^5 + 44*x^4 - 50*x^3 + 28*x^2 - 8*x + 1"));
  auto [q, r] = divmod(pc.discriminant, qpoly("(x - 1)^2"));
  CHECK(r.is_zero());
  CHECK(q == qpoly("x^4 - 14*x^3 + 15*x^2 - 6*x + 1"));
}

TEST_CASE("serial and OpenMP kernels agree") {
  const auto& h = *reg().curve("N3H1.H").hyperelliptic;
  CHECK(count_points(h, 5, 3, Kernel::serial) == count_points(h, 5, 3, Kernel::openmp));
  const auto d = appendix_curve_d().model();
  FiniteField k(7, 1);
  CHECK(enumerate_points(d, k, kDefaultEnumerationBudget, Kernel::serial) ==
        enumerate_points(d, k, kDefaultEnumerationBudget, Kernel::openmp));
  CHECK_THROWS_AS(enumerate_points(d, FiniteField(53, 1)), BudgetExceeded);
}
