#include "preper/dynatomic/families.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "preper/algebra/mpoly.hpp"
#include "preper/algebra/parser.hpp"
#include "preper/algebra/resultant.hpp"

namespace preper {

namespace {

QPoly P(const std::string& s, const std::string& var) { return to_qpoly(parse_polynomial(s, {var}), 0); }

MapFamily make(char id, const std::string& v, const std::string& f2, const std::string& f1, const std::string& f0,
               const std::string& g2, std::vector<Rational> excluded, const std::string& anum, const std::string& aden,
               bool excl_inf = false) {
  MapFamily m;
  m.id = id;
  m.param = v;
  m.forms.f = {P(f0, v), P(f1, v), P(f2, v)};
  m.forms.g = {QPoly{}, QPoly{}, P(g2, v)};
  m.excluded = std::move(excluded);
  m.excludes_infinity = excl_inf;
  m.a_num = P(anum, v);
  m.a_den = P(aden, v);
  return m;
}

const std::map<char, MapFamily>& table() {
  static const std::map<char, MapFamily> t = [] {
    std::map<char, MapFamily> m;
    m.emplace('A', make('A', "a", "a+1", "-a", "-1", "a+1", {0, -1, -2}, "a", "1"));
    m.emplace('B', make('B', "b", "b-1", "b^3-b^2+1", "-(b^3-b^2+b)", "b-1", {0, 1}, "-(b^3-b^2+1)", "b*(b^2-b+1)"));
    m.emplace('C', make('C', "c", "c^2+c-1", "-(2*c^2-1)", "c^2-c", "c^2+c-1", {0, 1, Rational(1, 2)}, "-(2*c^2-1)", "c^2-c"));
    m.emplace('D', make('D', "d", "2*d-1", "-(d^2+d-1)", "d^2-d", "2*d-1", {0, 1, Rational(1, 2)}, "-(d^2+d-1)", "d^2-d"));
    // a = -4t/(t^2-1) - 1 = -(t^2+4t-1)/(t^2-1)
    m.emplace('T', make('T', "t", "4*t", "-(t^2+4*t-1)", "t^2-1", "4*t", {-1, 0, 1}, "-(t^2+4*t-1)", "t^2-1", true));
    return m;
  }();
  return t;
}

}  // namespace

const MapFamily& family(char id) {
  auto it = table().find(id);
  if (it == table().end()) throw std::out_of_range(std::string("unknown family ") + id);
  return it->second;
}

const std::vector<char>& family_ids() {
  static const std::vector<char> ids{'A', 'B', 'C', 'D', 'T'};
  return ids;
}

namespace {

void check_excluded(const MapFamily& fam, const Rational& v) {
  if (std::find(fam.excluded.begin(), fam.excluded.end(), v) != fam.excluded.end()) {
    std::string list;
    for (const auto& e : fam.excluded) list += (list.empty() ? "" : ", ") + e.to_string();
    throw std::domain_error(std::string("family ") + fam.id + ": " + fam.param + " = " + v.to_string() +
                            " is excluded (" + fam.param + " not in {" + list + "})");
  }
}

}  // namespace

QuadRatMap family_specialize(const MapFamily& fam, const Rational& value) {
  check_excluded(fam, value);
  std::array<Rational, 3> f, g;
  for (int i = 0; i < 3; ++i) {
    f[i] = fam.forms.f[i].evaluate(value);
    g[i] = fam.forms.g[i].evaluate(value);
  }
  try {
    return QuadRatMap(f, g);
  } catch (const std::domain_error&) {
    throw std::domain_error(std::string("family ") + fam.id + ": " + fam.param + " = " + value.to_string() +
                            " gives a degenerate map");
  }
}

Rational parameter_to_a(const MapFamily& fam, const Rational& value) {
  check_excluded(fam, value);
  Rational den = fam.a_den.evaluate(value);
  if (den.is_zero())
    throw std::domain_error(std::string("family ") + fam.id + ": " + fam.param + " = " + value.to_string() +
                            " is a pole of the transform to a");
  return fam.a_num.evaluate(value) / den;
}

DynatomicPoly<QPoly> family_dynatomic(const MapFamily& fam, int n) { return dynatomic_star(fam.forms, n); }

}  // namespace preper

namespace preper {

PreimageCurve preimage_curve(const MapFamily& fam, const QPoly& num, const QPoly& den) {
  std::vector<QPoly> c(3);
  for (int i = 0; i < 3; ++i) c[i] = den * fam.forms.f[i] - num * fam.forms.g[i];
  PreimageCurve out;
  out.equation = QQPoly(c);
  if (out.equation.degree() < 2) throw std::domain_error("preimage condition has degree < 2 in w");
  out.discriminant = discriminant(out.equation);
  return out;
}

}  // namespace preper
