#include "preper/curves/points.hpp"

#include <omp.h>

#include <algorithm>

#include "preper/algebra/resultant.hpp"

namespace preper {

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Candidate points of one chart: `free` leading coordinates range over F_q,
// followed by the fixed tail.
struct Chart {
  unsigned free = 0;
  FPoint tail;
};

std::vector<Chart> charts(const CurveModel& c) {
  const auto n = static_cast<unsigned>(c.dimension());
  switch (c.ambient) {
    case Ambient::affine:
      return {{n, {}}};
    case Ambient::weighted:
      return {{2, {1}}, {1, {}}};  // (x, y, 1), and (1, y, 0) built specially
    case Ambient::projective: {
      std::vector<Chart> out;
      for (unsigned j = 0; j < n; ++j) {
        FPoint tail(n - j, 0);
        tail[0] = 1;
        out.push_back({j, tail});
      }
      return out;
    }
  }
  return {};
}

}  // namespace

std::vector<FPoint> enumerate_points(const CurveModel& c, const FiniteField& k, std::uint64_t budget, Kernel kernel) {
  const std::uint64_t q = k.order();
  std::vector<FqPoly> eqs;
  for (const auto& e : c.equations) eqs.emplace_back(e, k);
  auto cs = charts(c);
  std::uint64_t total = 0;
  for (const auto& ch : cs) total += ipow(q, ch.free);
  if (total > budget)
    throw BudgetExceeded(c.name + ": " + std::to_string(total) + " candidates over F_" + std::to_string(q) +
                         " exceed the budget " + std::to_string(budget));

  std::vector<FPoint> out;
  for (std::size_t ci = 0; ci < cs.size(); ++ci) {
    const auto& ch = cs[ci];
    const std::uint64_t size = ipow(q, ch.free);
    auto build = [&](std::uint64_t idx) {
      FPoint pt;
      if (c.ambient == Ambient::weighted && ci == 1) return FPoint{1, static_cast<FFElem>(idx), 0};
      pt.reserve(c.dimension());
      for (unsigned i = 0; i < ch.free; ++i) {
        pt.push_back(static_cast<FFElem>(idx % q));
        idx /= q;
      }
      pt.insert(pt.end(), ch.tail.begin(), ch.tail.end());
      return pt;
    };
    auto keep = [&](const FPoint& pt) {
      for (const auto& e : eqs)
        if (e(pt) != 0) return false;
      return true;
    };
    if (kernel == Kernel::serial) {
      for (std::uint64_t idx = 0; idx < size; ++idx) {
        FPoint pt = build(idx);
        if (keep(pt)) out.push_back(std::move(pt));
      }
    } else {
      std::vector<std::vector<FPoint>> found;
#pragma omp parallel
      {
#pragma omp single
        found.resize(static_cast<std::size_t>(omp_get_num_threads()));
        std::vector<FPoint> mine;
#pragma omp for schedule(static)
        for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(size); ++idx) {
          FPoint pt = build(static_cast<std::uint64_t>(idx));
          if (keep(pt)) mine.push_back(std::move(pt));
        }
        found[static_cast<std::size_t>(omp_get_thread_num())] = std::move(mine);
      }
      for (auto& f : found) out.insert(out.end(), f.begin(), f.end());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t count_points(const CurveModel& c, std::uint64_t p, unsigned k, std::uint64_t budget, Kernel kernel) {
  if (c.ambient == Ambient::affine) throw std::invalid_argument(c.name + ": count_points needs a projective model");
  FiniteField field(p, k);
  return enumerate_points(c, field, budget, kernel).size();
}

std::uint64_t count_points(const HyperellipticModel& h, std::uint64_t p, unsigned k, Kernel kernel) {
  if (p == 2) throw std::domain_error(h.name + ": character-sum count needs odd p");
  FiniteField field(p, k);
  std::vector<FFElem> f;
  for (int i = 0; i <= h.f.degree(); ++i) {
    auto r = field.from_rational(h.f.coeff(i));
    if (!r) throw std::domain_error(h.name + ": coefficient has no reduction mod " + std::to_string(p));
    f.push_back(*r);
  }
  if (f.back() == 0) throw std::domain_error(h.name + ": leading coefficient vanishes mod " + std::to_string(p));
  auto value = [&](FFElem x) {
    FFElem acc = 0;
    for (std::size_t i = f.size(); i-- > 0;) acc = field.add(field.mul(acc, x), f[i]);
    return acc;
  };
  const std::int64_t q = static_cast<std::int64_t>(field.order());
  std::int64_t sum = 0;
  if (kernel == Kernel::serial) {
    for (std::int64_t x = 0; x < q; ++x) sum += 1 + field.chi(value(static_cast<FFElem>(x)));
  } else {
#pragma omp parallel for reduction(+ : sum) schedule(static)
    for (std::int64_t x = 0; x < q; ++x) sum += 1 + field.chi(value(static_cast<FFElem>(x)));
  }
  std::int64_t infinite = h.f.degree() % 2 ? 1 : 1 + field.chi(f.back());
  return static_cast<std::uint64_t>(sum + infinite);
}

std::uint64_t count_points(const EllipticCurveW& e, std::uint64_t p, unsigned k, Kernel kernel) {
  FiniteField field(p, k);
  auto red = [&](const Rational& r) {
    auto v = field.from_rational(r);
    if (!v) throw std::domain_error(e.name + ": coefficient has no reduction mod " + std::to_string(p));
    return *v;
  };
  const FFElem a1 = red(e.a1), a2 = red(e.a2), a3 = red(e.a3), a4 = red(e.a4), a6 = red(e.a6);
  const std::int64_t q = static_cast<std::int64_t>(field.order());
  auto affine_at = [&](FFElem x) -> std::int64_t {
    FFElem b = field.add(field.mul(a1, x), a3);
    FFElem rhs = field.add(field.mul(field.add(field.mul(field.add(x, a2), x), a4), x), a6);
    if (p != 2) {
      // y^2 + b y - rhs = 0 has 1 + chi(b^2 + 4 rhs) roots.
      FFElem disc = field.add(field.mul(b, b), field.mul(field.from_int(4), rhs));
      return 1 + field.chi(disc);
    }
    std::int64_t n = 0;
    for (std::int64_t y = 0; y < q; ++y) {
      auto Y = static_cast<FFElem>(y);
      if (field.add(field.mul(Y, Y), field.mul(b, Y)) == rhs) ++n;
    }
    return n;
  };
  std::int64_t sum = 0;
  if (kernel == Kernel::serial) {
    for (std::int64_t x = 0; x < q; ++x) sum += affine_at(static_cast<FFElem>(x));
  } else {
#pragma omp parallel for reduction(+ : sum) schedule(static)
    for (std::int64_t x = 0; x < q; ++x) sum += affine_at(static_cast<FFElem>(x));
  }
  return static_cast<std::uint64_t>(sum + 1);
}

Integer LPolynomial::at_one() const {
  Integer s = 0;
  for (const auto& c : a) s += c;
  return s;
}

Integer LPolynomial::predicted_count(unsigned k) const {
  // Power sums s_j of the inverse roots from Newton's identities.
  std::vector<Integer> s(k + 1);
  auto coef = [&](std::size_t i) { return i < a.size() ? a[i] : Integer(0); };
  for (unsigned j = 1; j <= k; ++j) {
    Integer v = -Integer(j) * coef(j);
    for (unsigned i = 1; i < j; ++i) v -= coef(i) * s[j - i];
    s[j] = v;
  }
  Integer q;
  mpz_ui_pow_ui(q.get_mpz_t(), p, k);
  return q + 1 - s[k];
}

void require_good_reduction(const HyperellipticModel& h, std::uint64_t p) {
  const std::string where = h.name + " has bad reduction at p = " + std::to_string(p);
  if (p == 2) throw BadReduction(where + " (characteristic 2)");
  for (const auto& c : h.f.coeffs())
    if (!reduce_mod(c, p)) throw BadReduction(where + " (denominator)");
  if (*reduce_mod(h.f.leading(), p) == 0) throw BadReduction(where + " (leading coefficient)");
  auto disc = reduce_mod(discriminant(h.f), p);
  if (!disc || *disc == 0) throw BadReduction(where + " (discriminant)");
}

LPolynomial l_polynomial(const HyperellipticModel& h, std::uint64_t p, Kernel kernel) {
  require_good_reduction(h, p);
  const int g = h.genus();
  LPolynomial L;
  L.p = p;
  L.genus = g;
  L.a.assign(static_cast<std::size_t>(2 * g + 1), Integer(0));
  L.a[0] = 1;
  std::vector<Integer> s(static_cast<std::size_t>(g + 1));
  for (int j = 1; j <= g; ++j) {
    Integer q;
    mpz_ui_pow_ui(q.get_mpz_t(), p, static_cast<unsigned long>(j));
    s[j] = q + 1 - Integer(static_cast<unsigned long>(count_points(h, p, static_cast<unsigned>(j), kernel)));
    // j a_j = -sum_{i=1}^{j} s_i a_{j-i}
    Integer acc = 0;
    for (int i = 1; i <= j; ++i) acc -= s[i] * L.a[j - i];
    auto q_j = exact_quotient(acc, Integer(j));
    if (!q_j) throw std::logic_error(h.name + ": Newton identity not integral at p = " + std::to_string(p));
    L.a[j] = *q_j;
  }
  for (int i = 0; i < g; ++i) {
    Integer q;
    mpz_ui_pow_ui(q.get_mpz_t(), p, static_cast<unsigned long>(g - i));
    L.a[2 * g - i] = q * L.a[i];
  }
  return L;
}

Integer jacobian_order(const HyperellipticModel& h, std::uint64_t p, Kernel kernel) {
  return l_polynomial(h, p, kernel).at_one();
}

}  // namespace preper
