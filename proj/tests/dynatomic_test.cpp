#include <chrono>

#include "doctest.h"
#include "preper/algebra/resultant.hpp"
#include "preper/algebra/roots.hpp"
#include "preper/dynatomic/dynatomic.hpp"
#include "preper/dynatomic/families.hpp"
#include "preper/dynatomic/trace_map.hpp"
#include "preper/p1dyn/dynamics.hpp"
#include "preper/p1dyn/parse_map.hpp"
#include "test_util.hpp"

using namespace preper;
using testutil::qpoly;
using testutil::qqpoly;

namespace {

const char* kPhi3 =
    "(a^5 + 5*a^4 + 10*a^3 + 10*a^2 + 5*a + 1)*z^5 + (-2*a^5 - 7*a^4 - 9*a^3 - 4*a^2 + a + 1)*z^4"
    " + (a^5 - 7*a^3 - 13*a^2 - 10*a - 3)*z^3 + (2*a^4 + 5*a^3 + 4*a^2 + a)*z^2 + (a^3 + 3*a^2 + 3*a + 1)*z";

const char* kP3 = "a^3*z^3 - a^3*z^2 + 3*a^2*z^3 - 2*a^2*z + 3*a*z^3 + 2*a*z^2 - 2*a*z - a + z^3 + 2*z^2 - z - 1";

const char* kP4 =
    "(a^6 + 6*a^5 + 15*a^4 + 20*a^3 + 15*a^2 + 6*a + 1)*z^12"
    " + (-2*a^7 - 19*a^6 - 64*a^5 - 107*a^4 - 98*a^3 - 49*a^2 - 12*a - 1)*z^11"
    " + (a^8 + 16*a^7 + 77*a^6 + 152*a^5 + 128*a^4 + 16*a^3 - 46*a^2 - 30*a - 6)*z^10"
    " + (-3*a^8 - 27*a^7 - 58*a^6 + 38*a^5 + 248*a^4 + 304*a^3 + 165*a^2 + 41*a + 4)*z^9"
    " + (3*a^8 + 8*a^7 - 61*a^6 - 239*a^5 - 240*a^4 - 8*a^3 + 111*a^2 + 59*a + 9)*z^8"
    " + (-a^8 + 11*a^7 + 64*a^6 + 10*a^5 - 251*a^4 - 317*a^3 - 126*a^2 - 8*a + 2)*z^7"
    " + (-6*a^7 + 12*a^6 + 128*a^5 + 133*a^4 - 94*a^3 - 153*a^2 - 48*a - 1)*z^6"
    " + (-16*a^6 - 5*a^5 + 130*a^4 + 156*a^3 - a^2 - 42*a - 8)*z^5"
    " + (-25*a^5 - 26*a^4 + 78*a^3 + 94*a^2 + 12*a - 7)*z^4"
    " + (-25*a^4 - 31*a^3 + 26*a^2 + 33*a + 5)*z^3"
    " + (-16*a^3 - 20*a^2 + 2*a + 5)*z^2 + (-6*a^2 - 7*a - 1)*z - a - 1";

QQPoly neg(const QQPoly& p) { return QQPoly{} - p; }

bool equal_up_to_sign(const QQPoly& a, const QQPoly& b) { return a == b || a == neg(b); }

QuadForms<Rational> forms_of(const QuadRatMap& m) { return m.forms(); }

}  // namespace

TEST_CASE("first dynatomic polynomial of phi_a") {
  auto d = family_dynatomic(family('A'), 1);
  CHECK(d.poly() == qqpoly("(-a-1)*z^3 + (a+1)*z^2 - a*z - 1"));
  CHECK(d.form.degree == 3);
}

TEST_CASE("second dynatomic polynomial of phi_a") {
  auto d = family_dynatomic(family('A'), 2);
  CHECK(equal_up_to_sign(d.poly(), qqpoly("(a+1)*((a+1)*z^2 + (1-a)*z - 1)")));
}

TEST_CASE("third dynatomic polynomial and P_3") {
  auto d = family_dynatomic(family('A'), 3);
  CHECK(equal_up_to_sign(d.poly(), qqpoly(kPhi3)));
  CHECK(d.form.degree == 6);
  CHECK(equal_up_to_sign(reduced_p3(), qqpoly(kP3)));
  // Dividing by (a+1) z (z-1) alone leaves a factor a+1.
  auto once = exact_quotient(d.poly(), qqpoly("(a+1)*z*(z-1)"));
  REQUIRE(once);
  CHECK(equal_up_to_sign(*once, qqpoly(kP3) * QPoly(std::vector<Rational>{1, 1})));
}

TEST_CASE("fourth dynatomic polynomial divided by (a+1)^4") {
  CHECK(equal_up_to_sign(reduced_p4(), qqpoly(kP4)));
  CHECK(family_dynatomic(family('A'), 4).form.degree == 12);
}

TEST_CASE("resultant of first and second dynatomic polynomials") {
  auto r = resultant(family_dynatomic(family('A'), 1).poly(), family_dynatomic(family('A'), 2).poly());
  CHECK(r == qpoly("-(a+1)^4*(a^2+2*a+5)", "a"));
  // The only rational root is a = -1.
  CHECK(rational_roots(r) == std::vector<Rational>{Rational(-1)});
}

TEST_CASE("discriminant of the first dynatomic polynomial") {
  auto phi1 = family_dynatomic(family('A'), 1).poly();
  CHECK(discriminant(phi1) == qpoly("-3*a^4 - 16*a^3 - 50*a^2 - 60*a - 23", "a"));
}

TEST_CASE("Moebius identity: product of Phi*_k over k | n equals Phi_n") {
  const auto& forms = family('A').forms;
  for (int n = 1; n <= 4; ++n) {
    auto full = dynatomic_full(forms, n);
    CHECK(full.degree == (1 << n) + 1);
    QQPoly prod = QQPoly::constant(QPoly::constant(1));
    int deg = 0;
    for (int k = 1; k <= n; ++k) {
      if (n % k) continue;
      auto s = family_dynatomic(family('A'), k);
      prod = prod * s.poly();
      deg += s.form.degree;
    }
    CHECK(prod == full.poly);
    CHECK(deg == full.degree);
  }
  // Over Q at sampled parameters.
  for (long a : {1L, 3L, -7L}) {
    auto m = phi_a(Rational(a));
    auto q = forms_of(m);
    for (int n = 1; n <= 4; ++n) {
      QPoly prod = QPoly::constant(1);
      for (int k = 1; k <= n; ++k)
        if (n % k == 0) prod = prod * dynatomic_star(q, k).poly();
      CHECK(prod == dynatomic_full(q, n).poly);
    }
  }
}

TEST_CASE("iterates of phi_a") {
  auto it = iterate_pair(family('A').forms, 3);
  // phi_a^3(0) = 0 for every a: F_3(0, 1) = 0.
  CHECK(it.F[2].poly.coeff(0).is_zero());
  CHECK_FALSE(it.G[2].poly.coeff(0).is_zero());
  // At a = 1, phi^2(0) = 1.
  auto F2 = specialize_inner(it.F[1].poly, 1);
  auto G2 = specialize_inner(it.G[1].poly, 1);
  CHECK(F2.evaluate(Rational(0)) == G2.evaluate(Rational(0)));
  CHECK(it.F[1].degree == 4);
  CHECK_THROWS_AS(iterate_pair(family('A').forms, 7), std::out_of_range);
}

TEST_CASE("z^2 dynatomic polynomial") {
  QuadForms<Rational> sq{{0, 0, 1}, {1, 0, 0}};
  CHECK(dynatomic_star(sq, 1).poly() == qpoly("x^2 - x"));
}

TEST_CASE("rational roots of Phi*_n have actual period dividing n") {
  for (long a : {1L, 2L, -5L, 4L}) {
    auto m = phi_a(Rational(a));
    for (int n = 1; n <= 4; ++n) {
      auto p = dynatomic_star(m.forms(), n).poly();
      if (p.degree() < 1) continue;
      for (const auto& r : rational_roots(p)) {
        auto o = orbit(m, ProjPoint::from_rational(r), 64);
        REQUIRE(o);
        CHECK(o->preperiod() == 0);
        CHECK(n % o->period() == 0);
      }
    }
  }
}

TEST_CASE("family specialisation") {
  CHECK(family_specialize(family('A'), 1) == parse_map("(2*z^2 - z - 1)/(2*z^2)"));
  CHECK(family_specialize(family('C'), 2) == parse_map("(5*z^2 - 7*z + 2)/(5*z^2)"));
  CHECK(family_specialize(family('D'), 3) == parse_map("(5*z^2 - 11*z + 6)/(5*z^2)"));
  CHECK(family_specialize(family('B'), 2) == parse_map("(z^2 + 5*z - 6)/z^2"));
  CHECK_THROWS_WITH_AS(family_specialize(family('A'), -2), doctest::Contains("excluded"), std::domain_error);
  CHECK_THROWS_AS(family_specialize(family('T'), 1), std::domain_error);
}

TEST_CASE("parameter transforms") {
  CHECK(parameter_to_a(family('B'), 2) == Rational(-5, 6));
  CHECK(parameter_to_a(family('D'), 2) == Rational(-5, 2));
  Rational a = parameter_to_a(family('T'), 2);
  CHECK(a == Rational(-11, 3));
  CHECK((a + 1) * (a + 1) + 4 == Rational(100, 9));
  CHECK(square_root_rational((a + 1) * (a + 1) + 4));
  CHECK_THROWS_AS(parameter_to_a(family('C'), Rational(1, 2)), std::domain_error);
}

TEST_CASE("each family agrees with phi_a after the transform") {
  for (char id : family_ids()) {
    const auto& fam = family(id);
    int checked = 0;
    for (long num = -6; num <= 6; ++num)
      for (long den = 1; den <= 3; ++den) {
        Rational v(num, den);
        Rational a;
        try {
          a = parameter_to_a(fam, v);
          if (a == 0 || a == -1 || a == -2) continue;
        } catch (const std::domain_error&) {
          continue;
        }
        CAPTURE(id);
        CAPTURE(v);
        CHECK(family_specialize(fam, v) == family_specialize(family('A'), a));
        ++checked;
      }
    CHECK(checked > 10);
  }
}

TEST_CASE("family B has the fixed point b with preimage (b^2-b+1)/(b-1)^2") {
  for (long b : {2L, 3L, -2L, 5L}) {
    auto m = family_specialize(family('B'), b);
    auto bp = ProjPoint::from_rational(b);
    CHECK(m.apply(bp) == bp);
    Rational pre = Rational(b * b - b + 1) / Rational((b - 1) * (b - 1));
    CHECK(m.apply(ProjPoint::from_rational(pre)) == bp);
  }
}

TEST_CASE("trace map: n = 1 substitution property") {
  auto phi1 = family_dynatomic(family('A'), 1).poly();
  // Over Q[a][t]: Res_z(Phi*_1(z), t - z) = Phi*_1(t) up to sign, checked at sampled a.
  for (long a : {2L, -3L, 5L}) {
    QPoly p = specialize_inner(phi1, a);
    UniPoly<QPoly> P = p.map([](const Rational& c) { return QPoly::constant(c); });
    UniPoly<QPoly> L(std::vector<QPoly>{QPoly(std::vector<Rational>{0, 1}), QPoly::constant(-1)});
    QPoly r = resultant(P, L);
    CHECK((r == p || r == QPoly{} - p));
  }
}

TEST_CASE("trace map grid kernels agree") {
  auto d = trace_map_data();
  std::vector<long> as{-3, 0, 2, 7}, ts{-1, 0, 4};
  CHECK(resultant_grid(d, as, ts, Kernel::serial) == resultant_grid(d, as, ts, Kernel::openmp));
}

TEST_CASE("trace map factor divides Res_z(P_4, B t - A)") {
  MPoly factor = parse_polynomial(
      "a^7*t - 2*a^6*t^2 + a^5*t^3 - a^7 + 13*a^6*t - 17*a^5*t^2 + 5*a^4*t^3 - 7*a^6 + 53*a^5*t - 47*a^4*t^2"
      " + 10*a^3*t^3 - 6*a^5 + 80*a^4*t - 60*a^3*t^2 + 10*a^2*t^3 + 43*a^4 + 42*a^3*t - 38*a^2*t^2 + 5*a*t^3"
      " + 95*a^3 - 10*a^2*t - 11*a*t^2 + t^3 + 89*a^2 - 19*a*t - t^2 + 42*a - 6*t + 9",
      {"a", "t"});
  CHECK(factor.coeff({7, 1}) == 1);
  auto r = trace_map_quotient(factor);
  REQUIRE(r.quotient);
  CHECK(*r.quotient * factor == r.resultant);
  CHECK(r.resultant.degree_in(1) == 12);
  // Spot check against a direct rational resultant at (a, t) = (3, 2).
  auto grid = resultant_grid(r.data, {3}, {2}, Kernel::serial);
  CHECK_FALSE(grid[0] == 0);
  Rational direct = r.resultant.evaluate({Rational(3), Rational(2)});
  QPoly p4 = specialize_inner(r.data.p4, 3);
  QPoly bt_a = specialize_inner(r.data.den, 3) * Rational(2) - specialize_inner(r.data.num, 3);
  CHECK(resultant(p4, p4.degree(), bt_a, std::max(r.data.num.degree(), r.data.den.degree())) == direct);
}
