#include "preper/p1dyn/dynamics.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

#include "preper/algebra/roots.hpp"
#include "preper/dynatomic/dynatomic.hpp"

namespace preper {

std::optional<OrbitInfo> orbit(const QuadRatMap& phi, const ProjPoint& p, int max_steps) {
  std::map<ProjPoint, int> seen;
  std::vector<ProjPoint> path;
  ProjPoint cur = p;
  for (int step = 0; step <= max_steps; ++step) {
    auto [it, fresh] = seen.emplace(cur, step);
    if (!fresh) {
      OrbitInfo info;
      info.tail.assign(path.begin(), path.begin() + it->second);
      info.cycle.assign(path.begin() + it->second, path.end());
      return info;
    }
    path.push_back(cur);
    cur = phi.apply(cur);
  }
  return std::nullopt;
}

CriticalPoints critical_points(const QuadRatMap& phi) {
  const auto& f = phi.f();
  const auto& g = phi.g();
  CriticalPoints out;
  Integer A = f[2] * g[1] - f[1] * g[2];
  Integer B = 2 * (f[2] * g[0] - f[0] * g[2]);
  Integer C = f[1] * g[0] - f[0] * g[1];
  out.jacobian = {A, B, C};
  auto roots = binary_quadratic_roots(A, B, C);
  out.rational = roots.points;
  out.irrational_discriminant = roots.irrational_discriminant;
  return out;
}

QuadraticRoots rational_preimages(const QuadRatMap& phi, const ProjPoint& p) {
  // F(X,Y) y_P - G(X,Y) x_P = 0.
  const auto& f = phi.f();
  const auto& g = phi.g();
  Integer A = f[2] * p.y() - g[2] * p.x();
  Integer B = f[1] * p.y() - g[1] * p.x();
  Integer C = f[0] * p.y() - g[0] * p.x();
  return binary_quadratic_roots(A, B, C);
}

std::vector<PeriodicPoint> periodic_points(const QuadRatMap& phi, int max_period) {
  if (max_period < 1 || max_period > 6) throw std::invalid_argument("max_period must be in 1..6");
  std::vector<ProjPoint> candidates{ProjPoint::infinity()};
  const auto forms = phi.forms();
  for (int n = 1; n <= max_period; ++n) {
    auto dyn = dynatomic_star(forms, n);
    if (dyn.poly().is_zero()) continue;
    for (const auto& r : rational_roots(dyn.poly())) candidates.push_back(ProjPoint::from_rational(r));
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  std::vector<PeriodicPoint> out;
  for (const auto& c : candidates) {
    auto orb = orbit(phi, c, max_period + 1);
    if (!orb || orb->preperiod() != 0 || orb->period() > max_period) continue;
    out.push_back({c, orb->period()});
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.period != y.period ? x.period < y.period : x.point < y.point;
  });
  return out;
}

PrePerGraph preperiodic_graph(const QuadRatMap& phi, int max_period, int vertex_cap) {
  PrePerGraph out;
  out.periodic = periodic_points(phi, max_period);
  std::map<ProjPoint, int> index;
  std::deque<int> queue;
  auto add = [&](const ProjPoint& p) {
    if (index.count(p)) return;
    if (static_cast<int>(out.points.size()) >= vertex_cap)
      throw std::runtime_error("preperiodic closure exceeded " + std::to_string(vertex_cap) + " vertices");
    index.emplace(p, static_cast<int>(out.points.size()));
    queue.push_back(static_cast<int>(out.points.size()));
    out.points.push_back(p);
  };
  for (const auto& pp : out.periodic) add(pp.point);
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    ProjPoint p = out.points[v];
    for (const auto& q : rational_preimages(phi, p).points) add(q);
  }
  out.graph.succ.resize(out.points.size());
  out.graph.labels.resize(out.points.size());
  for (std::size_t i = 0; i < out.points.size(); ++i) {
    auto it = index.find(phi.apply(out.points[i]));
    if (it == index.end()) throw std::logic_error("preperiodic closure is not forward invariant");
    out.graph.succ[i] = it->second;
    out.graph.labels[i] = out.points[i].to_string();
  }
  return out;
}

QuadRatMap phi_a(const Rational& a) { return QuadRatMap({Rational(-1), -a, a + 1}, {Rational(0), Rational(0), a + 1}); }

NormalForm normalize_to_phi_a(const QuadRatMap& phi) {
  NormalForm out;
  auto crit = critical_points(phi);
  std::vector<std::vector<ProjPoint>> cycles;
  std::vector<ProjPoint> starts;
  for (const auto& c : crit.rational) {
    auto orb = orbit(phi, c, 4);
    if (orb && orb->preperiod() == 0 && orb->period() == 3) {
      cycles.push_back(orb->cycle);
      starts.push_back(c);
    }
  }
  if (starts.empty()) return out;
  const auto& cyc = cycles.front();
  // f(0) = P, f(inf) = phi(P), f(1) = phi^2(P).
  const auto& P0 = cyc[0];
  const auto& P1 = cyc[1];
  const auto& P2 = cyc[2];
  Integer alpha = P2.x() * P1.y() - P1.x() * P2.y();
  Integer beta = P0.x() * P2.y() - P2.x() * P0.y();
  Moebius f = Moebius::make(Rational(Integer(beta * P1.x())), Rational(Integer(alpha * P0.x())), Rational(Integer(beta * P1.y())),
                            Rational(Integer(alpha * P0.y())));
  out.conjugator = f;
  bool both_in_cycle = crit.rational.size() == 2 &&
                       std::all_of(crit.rational.begin(), crit.rational.end(), [&](const ProjPoint& c) {
                         return std::find(cyc.begin(), cyc.end(), c) != cyc.end();
                       });
  if (both_in_cycle) {
    out.kind = NormalForm::Kind::pcf;
    return out;
  }
  QuadRatMap psi = conjugate(phi, f);
  Rational a(psi.f()[1], psi.f()[0]);
  if (!(psi == phi_a(a))) throw std::logic_error("normalisation did not produce the phi_a form");
  out.kind = NormalForm::Kind::parameter;
  out.a = a;
  return out;
}

}  // namespace preper
