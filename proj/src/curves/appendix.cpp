#include "preper/curves/appendix.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "preper/algebra/parser.hpp"
#include "preper/curves/points.hpp"
#include "preper/curves/registry.hpp"
#include "preper/embedded_data.hpp"

namespace preper {

namespace {

const std::vector<std::string> kUV{"u", "v"};
const std::vector<std::string> kZT{"z", "t"};

MPoly var(std::size_t i) { return MPoly::variable(i); }

}  // namespace

const AppendixData& appendix_data() {
  static const AppendixData data = [] {
    AppendixData d;
    auto j = nlohmann::json::parse(embedded::kCurvesJson).at("appendix");
    const auto& reg = curve_registry();
    d.quartic = parse_polynomial(j.at("quartic").get<std::string>(), kZT);
    d.F = reg.curve("APP.C").plane->equation;
    for (const auto& g : j.at("differentials")) d.differentials.push_back(parse_polynomial(g.get<std::string>(), kUV));
    d.quadrics = reg.curve("APP.D").space->equations;
    d.c_points = reg.curve("APP.C").points;
    d.d_points = reg.curve("APP.D").points;
    for (const auto& im : j.at("images")) d.d_images.push_back(im.is_string() ? QPoint{} : parse_point(im));
    return d;
  }();
  return data;
}

PlaneCurveModel appendix_curve_c() { return *curve_registry().curve("APP.C").plane; }
SpaceCurveModel appendix_curve_d() { return *curve_registry().curve("APP.D").space; }

AppendixDerivation derive_appendix_curve(const AppendixData& d) {
  AppendixDerivation out;
  // phi_t = N / D in (z, t); phi_t o phi_t = N_2 / D_2 with G = 4 t X^2.
  const MPoly z = var(0), t = var(1);
  const MPoly N = 4 * t * z * z - (t * t + 4 * t - 1) * z + t * t - 1;
  const MPoly D = 4 * t * z * z;
  const MPoly N2 = 4 * t * N * N - (t * t + 4 * t - 1) * N * D + (t * t - 1) * D * D;
  const MPoly D2 = 4 * t * N * N;
  out.twofold = (t - 1) * N2 + (t + 1) * D2;
  std::ostringstream diff;
  if (auto q = exact_quotient(out.twofold, d.quartic); q && q->degree_in(0) == 0) {
    out.twofold_cofactor = *q;
    out.quartic_matches = true;
  } else {
    diff << "phi_t^2 equation is not a multiple of the quartic by a factor free of z; ";
  }

  // t = (u + 1)/(u - 1), z = 1/(1 - v).
  const MPoly u = var(0), v = var(1);
  RatFunc sub = substitute(d.quartic, {RatFunc(MPoly(1), 1 - v), RatFunc(u + 1, u - 1)});
  out.substituted = sub.num;
  if (auto q = exact_quotient(out.substituted, d.F)) {
    MPoly rest = *q;
    std::ostringstream stripped;
    for (const auto& [f, name] : std::vector<std::pair<MPoly, std::string>>{{u, "u"}, {u - 1, "(u - 1)"}, {v - 1, "(v - 1)"}}) {
      int k = 0;
      while (auto r = exact_quotient(rest, f)) {
        rest = *r;
        ++k;
      }
      if (k) stripped << " " << name << (k > 1 ? "^" + std::to_string(k) : "");
    }
    if (rest.is_constant()) {
      Rational c = rest.constant_term();
      out.sign = c.sign();
      out.stripped = c.to_string() + stripped.str();
      out.curve_matches = true;
    } else {
      diff << "cofactor " << to_string(rest, kUV) << " is not a product of u, u - 1, v - 1; ";
    }
  } else {
    diff << "substituted quartic is not divisible by F; ";
  }

  // Involution (u, v) -> (u, 1/u - 1 - u - v).
  RatFunc inv = substitute(d.F, {RatFunc(u), RatFunc(1 - u - u * u - u * v, u)});
  out.involution_numerator = inv.num;
  out.involution_divides = exact_quotient(inv.num, d.F).has_value();
  if (!out.involution_divides) diff << "involution image not divisible by F; ";

  // c = -a_3 / (2 a_4) for F = a_4 v^4 + a_3 v^3 + ...
  MPoly a4, a3;
  for (const auto& [e, c] : d.F.terms()) {
    if (e.size() < 2) continue;
    if (e[1] == 4) a4.add_term({e[0], 0}, c);
    if (e[1] == 3) a3.add_term({e[0], 0}, c);
  }
  if (d.F.degree_in(1) == 4) {
    QPoly n = to_qpoly(-a3, 0), dd = to_qpoly(2 * a4, 0), g = gcd(n, dd);
    n = divmod(n, g).first;
    dd = divmod(dd, g).first;
    Rational lc = dd.leading();
    out.root_involution_shift = RatFunc(from_qpoly(n * (1 / lc), 0), from_qpoly(dd * (1 / lc), 0));
    RatFunc w = out.root_involution_shift - RatFunc(v);
    out.root_involution_divides = exact_quotient(substitute(d.F, {RatFunc(u), w}).num, d.F).has_value();
  }
  out.difference = diff.str();
  return out;
}

bool EmbeddingReport::ok() const {
  if (!std::all_of(quadric_divisible.begin(), quadric_divisible.end(), [](bool b) { return b; })) return false;
  return std::all_of(points.begin(), points.end(), [](const PointImage& p) { return !p.image || p.d_index >= 0; });
}

EmbeddingReport verify_canonical_embedding(const AppendixData& d) {
  EmbeddingReport r;
  for (const auto& q : d.quadrics) r.quadric_divisible.push_back(exact_quotient(q.compose(d.differentials), d.F).has_value());
  SpaceCurveModel dm{"D", {"w1", "w2", "w3", "w4", "w5", "w6"}, d.quadrics, true, 6};
  CurveModel D = dm.model();
  for (const auto& p : d.c_points) {
    EmbeddingReport::PointImage pi;
    pi.c_point = p;
    QPoint uv{p[0] / p[2], p[1] / p[2]};
    QPoint w;
    for (const auto& g : d.differentials) w.push_back(g.evaluate(uv));
    if (!std::all_of(w.begin(), w.end(), [](const Rational& x) { return x.is_zero(); })) {
      pi.image = w;
      for (std::size_t i = 0; i < d.d_points.size(); ++i)
        if (same_point(D, w, d.d_points[i])) pi.d_index = static_cast<int>(i);
    }
    r.points.push_back(std::move(pi));
  }
  return r;
}

LineCheck line_intersection_empty_check(const std::vector<MPoly>& quadrics) {
  const std::vector<std::string> ws{"w1", "w2", "w3", "w4", "w5", "w6"};
  auto w = [](std::size_t i) { return MPoly::variable(i - 1); };
  CurveModel line{"line", Ambient::projective, ws, {w(1) + w(4), w(2) - w(4), w(5), w(6)}, 1, 0};
  CurveModel D{"D", Ambient::projective, ws, quadrics, 1, 6};
  FiniteField k(5, 1);
  LineCheck out;
  out.line_points = enumerate_points(line, k);
  for (const auto& p : out.line_points)
    if (on_curve(D, p, k)) out.on_curve.push_back(p);
  return out;
}

}  // namespace preper
