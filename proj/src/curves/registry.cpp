#include "preper/curves/registry.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "preper/algebra/parser.hpp"
#include "preper/embedded_data.hpp"

namespace preper {

namespace {

using nlohmann::json;

QPoint point_of(const json& j) { return parse_point(j.get<std::vector<std::string>>()); }

std::vector<QPoint> points_of(const json& j, const char* key) {
  std::vector<QPoint> out;
  if (!j.contains(key)) return out;
  for (const auto& p : j.at(key)) out.push_back(point_of(p));
  return out;
}

QPoly qpoly_of(const std::string& s) { return to_qpoly(parse_polynomial(s, {"x"}), 0); }

CurveEntry curve_of(const json& j) {
  CurveEntry e;
  e.id = j.at("id").get<std::string>();
  std::optional<int> genus;
  if (j.contains("genus")) genus = j.at("genus").get<int>();
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "plane") {
    auto vars = j.at("vars").get<std::vector<std::string>>();
    e.plane.emplace(e.id, vars, parse_polynomial(j.at("equation").get<std::string>(), vars), genus);
    e.model = j.at("chart").get<std::string>() == "affine" ? e.plane->affine() : e.plane->projective();
  } else if (kind == "hyperelliptic") {
    e.hyperelliptic.emplace(e.id, qpoly_of(j.at("f").get<std::string>()));
    e.model = e.hyperelliptic->model();
  } else if (kind == "weierstrass") {
    auto a = j.at("a").get<std::vector<std::string>>();
    e.elliptic.emplace(e.id, Rational::parse(a.at(0)), Rational::parse(a.at(1)), Rational::parse(a.at(2)),
                       Rational::parse(a.at(3)), Rational::parse(a.at(4)));
    e.model = e.elliptic->model();
  } else if (kind == "space") {
    SpaceCurveModel s;
    s.name = e.id;
    s.vars = j.at("vars").get<std::vector<std::string>>();
    s.projective = j.at("projective").get<bool>();
    s.genus = genus;
    for (const auto& eq : j.at("equations")) s.equations.push_back(parse_polynomial(eq.get<std::string>(), s.vars));
    e.space = s;
    e.model = s.model();
  } else {
    throw std::runtime_error("curve table: unknown kind " + kind);
  }
  e.points = points_of(j, "points");
  e.points_f5 = points_of(j, "points_f5");
  if (j.contains("mumford"))
    for (const auto& m : j.at("mumford"))
      e.mumford.emplace_back(qpoly_of(m.at(0).get<std::string>()), qpoly_of(m.at(1).get<std::string>()));
  return e;
}

MapEntry map_of(const CurveRegistry& reg, const json& j) {
  MapEntry m;
  m.map.name = j.at("id").get<std::string>();
  m.map.source = reg.curve(j.at("source").get<std::string>()).model;
  m.map.target = reg.curve(j.at("target").get<std::string>()).model;
  auto vars = j.at("vars").get<std::vector<std::string>>();
  for (const auto& c : j.at("coords")) m.map.coords.push_back(parse_expression(c.get<std::string>(), vars));
  m.indeterminacy_stated = j.contains("indeterminacy");
  m.map.indeterminacy = points_of(j, "indeterminacy");
  m.derived = j.value("derived", false);
  if (j.contains("pairs"))
    for (const auto& p : j.at("pairs")) {
      MapPointPair pr;
      pr.source = point_of(p.at("source"));
      if (!p.at("image").is_null()) pr.image = point_of(p.at("image"));
      m.pairs.push_back(std::move(pr));
    }
  m.primes = j.at("primes").get<std::vector<std::uint64_t>>();
  return m;
}

}  // namespace

const CurveEntry& CurveRegistry::curve(const std::string& id) const {
  for (const auto& c : curves)
    if (c.id == id) return c;
  throw std::out_of_range("no curve " + id);
}

const MapEntry& CurveRegistry::map(const std::string& id) const {
  for (const auto& m : maps)
    if (m.map.name == id) return m;
  throw std::out_of_range("no map " + id);
}

const CurveRegistry& curve_registry() {
  static const CurveRegistry reg = [] {
    CurveRegistry r;
    auto j = json::parse(embedded::kCurvesJson);
    for (const auto& c : j.at("curves")) r.curves.push_back(curve_of(c));
    for (const auto& m : j.at("maps")) r.maps.push_back(map_of(r, m));
    return r;
  }();
  return reg;
}

MapCheck check_map_entry(const CurveRegistry& reg, const MapEntry& m) {
  MapCheck out;
  const auto& source_points = [&]() -> const std::vector<QPoint>& {
    for (const auto& c : reg.curves)
      if (c.id == m.map.source.name) return c.points;
    throw std::out_of_range("no curve " + m.map.source.name);
  }();
  const auto& target = reg.curve(m.map.target.name);
  std::vector<MapPointPair> pairs = m.pairs;
  CurveMap map = m.map;
  if (pairs.empty()) {
    for (const auto& p : source_points) {
      bool indeterminate = std::any_of(map.indeterminacy.begin(), map.indeterminacy.end(),
                                       [&](const QPoint& q) { return same_point(map.source, p, q); });
      auto img = preper::apply(map, p);
      MapPointPair pr{p, std::nullopt};
      if (!indeterminate && img) {
        pr.image = *img;
        bool listed = std::any_of(target.points.begin(), target.points.end(),
                                  [&](const QPoint& q) { return same_point(map.target, *img, q); });
        if (!listed)
          out.unlisted_images.push_back(point_to_string(p, map.source.ambient) + " -> " +
                                        point_to_string(normalize(map.target, *img), map.target.ambient));
      }
      pairs.push_back(std::move(pr));
    }
  }
  // Without a stated locus, the points paired with no image become the record.
  if (!m.indeterminacy_stated)
    for (const auto& pr : pairs)
      if (!pr.image) map.indeterminacy.push_back(pr.source);
  out.report = verify_curve_map(map, m.primes, pairs);
  return out;
}

}  // namespace preper
