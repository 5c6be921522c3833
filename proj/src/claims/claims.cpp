#include "preper/claims/claims.hpp"

#include <omp.h>

#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "preper/algebra/parser.hpp"
#include "preper/algebra/resultant.hpp"
#include "preper/app/classify.hpp"
#include "preper/curves/appendix.hpp"
#include "preper/curves/checks.hpp"
#include "preper/curves/elliptic.hpp"
#include "preper/curves/points.hpp"
#include "preper/curves/registry.hpp"
#include "preper/dynatomic/families.hpp"
#include "preper/dynatomic/trace_map.hpp"
#include "preper/embedded_data.hpp"
#include "preper/graphcat/hasse.hpp"
#include "preper/p1dyn/parse_map.hpp"

namespace preper {

namespace {

using nlohmann::json;

struct Outcome {
  std::string status;
  std::string computed;
  std::string detail;
};

Outcome verdict(bool ok, std::string computed, std::string detail = {}) {
  return {ok ? claim_status::pass : claim_status::fail, std::move(computed), std::move(detail)};
}

QQPoly zq(const std::string& text) { return to_qqpoly(parse_polynomial(text, {"z", "a"}), 0, 1); }
QPoly uni(const std::string& text, const std::string& var) { return to_qpoly(parse_polynomial(text, {var}), 0); }
std::string show(const QQPoly& p) { return to_string(p, "z", "a"); }

bool same_up_to_sign(const QQPoly& a, const QQPoly& b) { return a == b || a == QQPoly{} - b; }

Outcome poly_claim(const QQPoly& computed, const std::string& expected, bool up_to_sign) {
  QQPoly e = zq(expected);
  bool ok = up_to_sign ? same_up_to_sign(computed, e) : computed == e;
  std::string detail;
  if (ok && computed != e) detail = "equal up to sign";
  return verdict(ok, show(computed), detail);
}

const CurveEntry& curve(const json& args) { return curve_registry().curve(args.at("curve").get<std::string>()); }

using Check = std::function<Outcome(const json& args, const std::string& expected)>;

const std::map<std::string, Check>& checks() {
  static const std::map<std::string, Check> table = {
      {"classify_map",
       [](const json& args, const std::string& expected) {
         auto c = classify_map(parse_map(args.at("map").get<std::string>()), 4);
         if (!c.in_family) return verdict(false, "outside family");
         std::string got = c.classification.describe() + ", " + std::to_string(c.graph.graph.size()) + " vertices";
         bool ok = got == expected;
         std::string detail;
         if (c.classification.kind == Classification::Kind::exact) {
           const auto& e = catalog_entry(c.classification.exact_id);
           std::multiset<std::string> want(e.graph.labels.begin(), e.graph.labels.end());
           std::multiset<std::string> have(c.graph.graph.labels.begin(), c.graph.graph.labels.end());
           if (want != have) {
             ok = false;
             detail = "vertex set differs from the catalog drawing";
           }
         }
         return verdict(ok, got, detail);
       }},
      {"dynatomic",
       [](const json& args, const std::string& expected) {
         auto d = family_dynatomic(family('A'), args.at("n").get<int>());
         return poly_claim(d.poly(), expected, args.value("up_to_sign", false));
       }},
      {"reduced_p3", [](const json&, const std::string& expected) { return poly_claim(reduced_p3(), expected, true); }},
      {"reduced_p4", [](const json&, const std::string& expected) { return poly_claim(reduced_p4(), expected, true); }},
      {"resultant12",
       [](const json&, const std::string& expected) {
         auto r = resultant(family_dynatomic(family('A'), 1).poly(), family_dynatomic(family('A'), 2).poly());
         return verdict(r == uni(expected, "a"), to_string(r, "a"));
       }},
      {"discriminant1",
       [](const json&, const std::string& expected) {
         auto d = discriminant(family_dynatomic(family('A'), 1).poly());
         return verdict(d == uni(expected, "a"), to_string(d, "a"));
       }},
      {"preimage_discriminant",
       [](const json& args, const std::string&) {
         const auto fam = args.at("family").get<std::string>();
         auto pc = preimage_curve(family(fam.at(0)), uni(args.at("num"), "d"), uni(args.at("den"), "d"));
         QQPoly eq = to_qqpoly(parse_polynomial(args.at("equation").get<std::string>(), {"w", "d"}), 0, 1);
         bool eq_ok = same_up_to_sign(pc.equation, eq);
         QPoly f = uni(args.at("factor"), "d");
         auto [q, r] = divmod(pc.discriminant, f);
         std::string computed = to_string(pc.discriminant, "d") + " = (" + to_string(f, "d") + ") * (" + to_string(q, "d") + ")";
         std::string detail = eq_ok ? "" : "preimage equation " + to_string(pc.equation, "w", "d") + " differs";
         if (!r.is_zero()) detail += " remainder " + to_string(r, "d");
         QPoly want = uni("d^6 - 16*d^5 + 44*d^4 - 50*d^3 + 28*d^2 - 8*d + 1", "d");
         QPoly want_q = uni("d^4 - 14*d^3 + 15*d^2 - 6*d + 1", "d");
         return verdict(eq_ok && r.is_zero() && pc.discriminant == want && q == want_q, computed, detail);
       }},
      {"trace_map",
       [](const json&, const std::string& expected) {
         MPoly factor = parse_polynomial(expected, {"a", "t"});
         auto r = trace_map_quotient(factor);
         bool ok = r.quotient && *r.quotient * factor == r.resultant;
         std::string computed = ok ? "divides; cofactor degree " + std::to_string(r.quotient->total_degree()) + " from " +
                                         std::to_string(r.samples) + " samples"
                                   : "does not divide";
         return verdict(ok, computed);
       }},
      {"points_on_curves",
       [](const json&, const std::string&) {
         std::size_t total = 0, good = 0;
         std::string bad;
         for (const auto& c : curve_registry().curves)
           for (const auto& p : c.points) {
             ++total;
             if (on_curve(c.model, p)) ++good;
             else bad += " " + c.id + " " + point_to_string(p, c.model.ambient);
           }
         return verdict(good == total, std::to_string(good) + " of " + std::to_string(total), bad);
       }},
      {"ec_order",
       [](const json& args, const std::string& expected) {
         auto xy = args.at("point").get<std::vector<std::string>>();
         auto t = ec_order_of_point(*curve(args).elliptic, ECPoint::affine(Rational::parse(xy[0]), Rational::parse(xy[1])));
         std::string got = t.order ? std::to_string(*t.order) : "infinite";
         return verdict(got == expected, t.to_string());
       }},
      {"point_count",
       [](const json& args, const std::string& expected) {
         auto n = count_points(*curve(args).hyperelliptic, args.at("p").get<std::uint64_t>(), args.value("k", 1u));
         return verdict(std::to_string(n) == expected, std::to_string(n));
       }},
      {"space_count",
       [](const json& args, const std::string& expected) {
         auto n = count_points(curve(args).model, args.at("p").get<std::uint64_t>());
         return verdict(std::to_string(n) == expected, std::to_string(n));
       }},
      {"jacobian_order",
       [](const json& args, const std::string& expected) {
         auto j = jacobian_order(*curve(args).hyperelliptic, args.at("p").get<std::uint64_t>());
         return verdict(j.get_str() == expected, j.get_str());
       }},
      {"jacobian_order_multiple",
       [](const json& args, const std::string&) {
         auto j = jacobian_order(*curve(args).hyperelliptic, args.at("p").get<std::uint64_t>());
         long of = args.at("of").get<long>();
         return verdict(j % of == 0, j.get_str());
       }},
      {"reduction",
       [](const json& args, const std::string& expected) {
         const auto& c = curve(args);
         auto r = reduction_injection_report(c.model, args.at("p").get<std::uint64_t>(), c.points);
         std::string got = std::to_string(r.reductions.size()) + " of " + std::to_string(r.fp_points.size());
         std::string detail = r.exhausts ? "paper argument reproduced" : "reductions do not exhaust the F_p points";
         if (!r.exhausts) detail += "; the subgroup-image part of the argument is not checked";
         return verdict(got == expected && r.all_on_curve && r.unreducible.empty(), got, detail);
       }},
      {"listed_fp_points",
       [](const json& args, const std::string&) {
         const auto& c = curve(args);
         FiniteField k(args.at("p").get<std::uint64_t>(), 1);
         auto pts = enumerate_points(c.model, k);
         std::vector<FPoint> listed;
         for (const auto& q : c.points_f5) listed.push_back(normalize(c.model, *reduce_point(c.model, q, k), k));
         std::sort(listed.begin(), listed.end());
         return verdict(pts == listed, std::to_string(listed.size()) + " listed, " + std::to_string(pts.size()) + " found");
       }},
      {"mumford",
       [](const json& args, const std::string&) {
         const auto& c = curve(args);
         std::size_t ok = 0;
         for (const auto& [u, v] : c.mumford) ok += mumford_consistency(u, v, c.hyperelliptic->f);
         return verdict(ok == c.mumford.size() && ok > 0, std::to_string(ok) + " of " + std::to_string(c.mumford.size()));
       }},
      {"curve_map",
       [](const json& args, const std::string&) {
         const auto& reg = curve_registry();
         auto m = check_map_entry(reg, reg.map(args.at("map").get<std::string>()));
         std::string detail;
         for (const auto& f : m.report.failures) detail += f + "; ";
         for (const auto& f : m.unlisted_images) detail += "unlisted image " + f + "; ";
         std::string primes;
         for (const auto& [p, n] : m.report.checked) primes += (primes.empty() ? "" : ", ") + std::to_string(p);
         bool ok = m.ok() && m.report.checked.size() >= 2;
         std::string computed = ok ? "consistent at p = " + primes : "inconsistent";
         computed += ", " + std::to_string(m.report.indeterminate.size()) + " indeterminate listed points";
         return verdict(ok, computed, detail);
       }},
      {"appendix_quartic",
       [](const json&, const std::string&) {
         auto d = derive_appendix_curve();
         return verdict(d.quartic_matches, d.quartic_matches ? "equal, cofactor " + to_string(d.twofold_cofactor, {"z", "t"})
                                                             : "differs",
                        d.quartic_matches ? "" : d.difference);
       }},
      {"appendix_curve",
       [](const json&, const std::string&) {
         auto d = derive_appendix_curve();
         return verdict(d.curve_matches, d.curve_matches ? "F times " + d.stripped : "differs", d.curve_matches ? "" : d.difference);
       }},
      {"appendix_involution",
       [](const json&, const std::string&) {
         auto d = derive_appendix_curve();
         std::string detail;
         if (!d.involution_divides && d.root_involution_divides)
           detail = "the root-sum involution (u, 1/u + 1 - u - v) does preserve F";
         return verdict(d.involution_divides, d.involution_divides ? "divisible" : "not divisible", detail);
       }},
      {"appendix_root_involution",
       [](const json&, const std::string&) {
         auto d = derive_appendix_curve();
         const auto& s = d.root_involution_shift;
         return verdict(d.root_involution_divides,
                        "v -> (" + to_string(s.num, {"u", "v"}) + ")/(" + to_string(s.den, {"u", "v"}) + ") - v" +
                            (d.root_involution_divides ? ", divisible" : ", not divisible"));
       }},
      {"canonical_embedding",
       [](const json&, const std::string&) {
         auto r = verify_canonical_embedding();
         std::size_t q = std::count(r.quadric_divisible.begin(), r.quadric_divisible.end(), true);
         std::size_t mapped = 0, matched = 0;
         for (const auto& p : r.points)
           if (p.image) {
             ++mapped;
             matched += p.d_index >= 0;
           }
         return verdict(r.ok(), std::to_string(q) + " of 6 quadrics; " + std::to_string(matched) + " of " +
                                    std::to_string(mapped) + " defined images listed");
       }},
      {"line_check",
       [](const json&, const std::string&) {
         auto l = line_intersection_empty_check();
         return verdict(l.empty() && l.line_points.size() == 6,
                        std::to_string(l.line_points.size()) + " line points, " + std::to_string(l.on_curve.size()) + " on D");
       }},
      {"singular",
       [](const json& args, const std::string& expected) {
         auto r = singular_locus_fp(appendix_curve_d().model(), args.at("p").get<std::uint64_t>());
         std::string got = std::to_string(r.singular.size()) + " singular of " + std::to_string(r.examined) + " points";
         bool ok = expected == "none" ? r.singular.empty() : !r.singular.empty();
         return verdict(ok && r.complete, got);
       }},
      {"singular_images",
       [](const json& args, const std::string&) {
         auto r = singular_points_via_images(appendix_curve_d().model(), appendix_curve_c().affine(),
                                             appendix_data().differentials, args.at("p").get<std::uint64_t>());
         return Outcome{claim_status::partial,
                        std::to_string(r.singular.size()) + " singular among " + std::to_string(r.examined) + " image points",
                        "strategy: " + r.strategy + "; D(F_p) is not enumerated"};
       }},
      {"not_attempted",
       [](const json&, const std::string&) {
         return Outcome{claim_status::budget, "", "P^5(F_p) is far beyond the enumeration budget"};
       }},
      {"assumed", [](const json&, const std::string&) { return Outcome{claim_status::assumed, "", ""}; }},
      {"hasse_closure",
       [](const json&, const std::string&) {
         auto r = verify_hasse_closure();
         std::size_t uncovered = 0;
         std::string detail;
         for (const auto& c : r.cases)
           if (!c.covered) {
             ++uncovered;
             detail += c.graph_id + " / " + c.step + "; ";
           }
         return verdict(r.all_covered(), std::to_string(r.cases.size()) + " cases, " + std::to_string(uncovered) + " uncovered",
                        detail);
       }},
  };
  return table;
}

const json& manifest() {
  static const json j = json::parse(embedded::kClaimsJson);
  return j;
}

const std::set<std::string> kGroups{"all", "dynatomic", "curves", "appendix", "hasse", "classify"};

bool selected(const json& c, const std::string& selector) {
  if (selector == "all") return true;
  if (kGroups.count(selector)) return c.at("group").get<std::string>() == selector;
  return c.at("id").get<std::string>() == selector;
}

}  // namespace

bool ClaimResult::failed() const { return status == claim_status::fail || status == claim_status::error; }

json ClaimResult::to_json() const {
  json j{{"id", id},         {"group", group},           {"status", status}, {"computed", computed},
         {"expected", expected}, {"provenance", provenance}, {"ref", ref},       {"seconds", seconds}};
  if (!detail.empty()) j["detail"] = detail;
  return j;
}

bool ClaimsReport::ok() const {
  return std::none_of(results.begin(), results.end(), [](const ClaimResult& r) { return r.failed(); });
}

json ClaimsReport::to_json() const {
  std::map<std::string, int> tally;
  json rs = json::array();
  for (const auto& r : results) {
    ++tally[r.status];
    rs.push_back(r.to_json());
  }
  return {{"selector", selector}, {"ok", ok()}, {"summary", tally}, {"claims", rs}};
}

std::string ClaimsReport::to_text() const {
  std::ostringstream os;
  for (const auto& r : results) {
    os << r.status << "  " << r.id << ": " << (r.computed.empty() ? r.expected : r.computed);
    if (r.failed()) os << " (expected " << r.expected << ")";
    if (!r.detail.empty()) os << " [" << r.detail << "]";
    os << "\n";
  }
  std::map<std::string, int> tally;
  for (const auto& r : results) ++tally[r.status];
  for (const auto& [s, n] : tally) os << n << " " << s << "\n";
  return os.str();
}

bool valid_claim_selector(const std::string& selector) {
  if (kGroups.count(selector)) return true;
  for (const auto& c : manifest().at("claims"))
    if (c.at("id").get<std::string>() == selector) return true;
  return false;
}

ClaimsReport verify_claims(const std::string& selector, int jobs) {
  if (!valid_claim_selector(selector)) throw std::invalid_argument("unknown claim selector: " + selector);
  std::vector<json> todo;
  for (const auto& c : manifest().at("claims"))
    if (selected(c, selector)) todo.push_back(c);
  ClaimsReport report;
  report.selector = selector;
  report.results.resize(todo.size());
  const long n = static_cast<long>(todo.size());
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, jobs))
  for (long i = 0; i < n; ++i) {
    const auto& c = todo[i];
    ClaimResult& r = report.results[i];
    r.id = c.at("id").get<std::string>();
    r.group = c.at("group").get<std::string>();
    r.expected = c.at("expected").get<std::string>();
    r.provenance = c.at("provenance").get<std::string>();
    r.ref = c.value("ref", "");
    auto t0 = std::chrono::steady_clock::now();
    try {
      const auto& check = checks().at(c.at("check").get<std::string>());
      auto o = check(c.value("args", json::object()), r.expected);
      r.status = o.status;
      r.computed = o.computed;
      r.detail = o.detail;
    } catch (const std::exception& e) {
      r.status = claim_status::error;
      r.detail = e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
  return report;
}

}  // namespace preper
