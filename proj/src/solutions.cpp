#include "wbk/solutions.hpp"

#include <string>

namespace wbk {

SolutionTable::SolutionTable(std::size_t order, std::vector<ElementPair> map)
    : order_(order), map_(std::move(map)) {
  if (map_.size() != order_ * order_) fail(ViolationKind::NotClosed, {}, "solution table is not total");
  for (const auto& [u, v] : map_)
    if (u >= order_ || v >= order_) fail(ViolationKind::NotClosed, {u, v}, "pair out of range");
}

SolutionTable SolutionTable::identity(std::size_t order) {
  std::vector<ElementPair> map;
  map.reserve(order * order);
  for (Element a = 0; a < order; ++a)
    for (Element b = 0; b < order; ++b) map.emplace_back(a, b);
  return SolutionTable(order, std::move(map));
}

SolutionTable then(const SolutionTable& g, const SolutionTable& f) {
  std::vector<ElementPair> map;
  map.reserve(g.entries().size());
  for (const auto& p : g.entries()) map.push_back(f(p));
  return SolutionTable(g.order(), std::move(map));
}

SolutionTable power(const SolutionTable& r, std::size_t k) {
  SolutionTable out = SolutionTable::identity(r.order());
  for (std::size_t i = 0; i < k; ++i) out = then(out, r);
  return out;
}

SolutionTable solution_of(const DualWeakBrace& s) {
  const auto n = static_cast<Element>(s.order());
  std::vector<ElementPair> map;
  map.reserve(std::size_t{n} * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) map.emplace_back(lambda(s, a, b), rho(s, b, a));
  return SolutionTable(n, std::move(map));
}

BraidReport check_braid(const SolutionTable& r) {
  BraidReport report;
  const auto n = static_cast<Element>(r.order());
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c) {
        ++report.triples_checked;
        // (r x id)(id x r)(r x id): apply r to positions 12, 23, 12.
        auto [x1, y1] = r(a, b);
        auto [y2, z2] = r(y1, c);
        auto [x3, y3] = r(x1, y2);
        // (id x r)(r x id)(id x r): positions 23, 12, 23.
        auto [q1, w1] = r(b, c);
        auto [p2, q2] = r(a, q1);
        auto [q3, w3] = r(q2, w1);
        if (x3 != p2 || y3 != q3 || z2 != w3) {
          report.witness = std::vector<Element>{a, b, c};
          return report;
        }
      }
  return report;
}

WeakInverseReport check_weak_inverses(const DualWeakBrace& s) {
  const auto r = solution_of(s);
  const auto rop = solution_of(opposite(s));
  WeakInverseReport report;
  report.r_rop_r = r * rop * r == r;
  report.rop_r_rop = rop * r * rop == rop;
  report.commute = r * rop == rop * r;
  if (s.idempotents().size() == 1) report.rop_is_inverse = r * rop == SolutionTable::identity(s.order());
  std::vector<bool> hit(r.entries().size(), false);
  for (const auto& [u, v] : r.entries()) {
    const auto idx = std::size_t{u} * s.order() + v;
    if (!hit[idx]) {
      hit[idx] = true;
      ++report.image_size;
    }
  }
  report.r_bijective = report.image_size == r.entries().size();
  return report;
}

namespace {

bool bijective(std::size_t n, auto&& f) {
  std::vector<bool> hit(n, false);
  for (Element x = 0; x < n; ++x) {
    const Element y = f(x);
    if (hit[y]) return false;
    hit[y] = true;
  }
  return true;
}

}  // namespace

RegularityReport check_regularity(const DualWeakBrace& s) {
  RegularityReport report;
  const auto n = static_cast<Element>(s.order());
  auto lam = [&](Element a, Element x) { return lambda(s, a, x); };
  auto rh = [&](Element a, Element x) { return rho(s, a, x); };
  for (Element a = 0; a < n && !report.failure; ++a) {
    const Element ai = s.circ_inverse(a);
    for (Element x = 0; x < n && !report.failure; ++x) {
      auto check = [&](bool ok, const char* name) {
        if (!ok && !report.failure) report.failure = std::pair{a, std::string(name)};
      };
      check(lam(a, lam(ai, lam(a, x))) == lam(a, x), "lambda_a lambda_a- lambda_a = lambda_a");
      check(lam(ai, lam(a, lam(ai, x))) == lam(ai, x), "lambda_a- lambda_a lambda_a- = lambda_a-");
      check(lam(a, lam(ai, x)) == lam(ai, lam(a, x)), "lambda_a lambda_a- = lambda_a- lambda_a");
      check(rh(a, rh(ai, rh(a, x))) == rh(a, x), "rho_a rho_a- rho_a = rho_a");
      check(rh(ai, rh(a, rh(ai, x))) == rh(ai, x), "rho_a- rho_a rho_a- = rho_a-");
      check(rh(a, rh(ai, x)) == rh(ai, rh(a, x)), "rho_a rho_a- = rho_a- rho_a");
    }
  }
  for (Element a = 0; a < n; ++a) {
    report.lambda_bijective.push_back(bijective(n, [&](Element x) { return lam(a, x); }));
    report.rho_bijective.push_back(bijective(n, [&](Element x) { return rh(a, x); }));
  }
  return report;
}

std::size_t period(const SolutionTable& r) {
  std::map<std::vector<ElementPair>, std::size_t> seen;
  seen.emplace(r.entries(), 1);
  SolutionTable current = r;
  for (std::size_t k = 2;; ++k) {
    current = then(current, r);
    if (current == r) return k - 1;
    auto [it, inserted] = seen.emplace(current.entries(), k);
    if (!inserted)
      fail(ViolationKind::NoPeriod, {},
           "powers enter a cycle at r^" + std::to_string(it->second) + " of length " +
               std::to_string(k - it->second) + " that avoids r");
  }
}

SolutionTable strong_semilattice_of_solutions(const SemilatticeTable& y,
                                              const std::vector<SolutionTable>& solutions,
                                              const std::map<ComponentPair, ElementMap>& maps) {
  const auto k = static_cast<Element>(y.size());
  if (solutions.size() != k) fail(ViolationKind::OrderMismatch, {}, "one solution per semilattice element");
  auto connect = [&](Element alpha, Element beta, Element x) -> Element {
    if (alpha == beta) return x;
    auto it = maps.find({alpha, beta});
    if (it == maps.end()) fail(ViolationKind::MissingHom, {alpha, beta});
    if (it->second.size() != solutions[alpha].order() || it->second[x] >= solutions[beta].order())
      fail(ViolationKind::NotClosed, {alpha, beta}, "connecting map out of range");
    return it->second[x];
  };

  for (Element alpha = 0; alpha < k; ++alpha)
    for (Element beta = 0; beta < k; ++beta) {
      if (alpha == beta || !y.geq(alpha, beta)) continue;
      const auto& ra = solutions[alpha];
      const auto& rb = solutions[beta];
      for (Element a = 0; a < ra.order(); ++a)
        for (Element b = 0; b < ra.order(); ++b) {
          const auto [u, v] = ra(a, b);
          const auto lhs = ElementPair{connect(alpha, beta, u), connect(alpha, beta, v)};
          if (lhs != rb(connect(alpha, beta, a), connect(alpha, beta, b)))
            fail(ViolationKind::EquivarianceViolation, {alpha, beta, a, b});
        }
    }
  for (Element alpha = 0; alpha < k; ++alpha)
    for (Element beta = 0; beta < k; ++beta)
      for (Element gamma = 0; gamma < k; ++gamma) {
        if (alpha == beta || beta == gamma || !y.geq(alpha, beta) || !y.geq(beta, gamma)) continue;
        for (Element a = 0; a < solutions[alpha].order(); ++a)
          if (connect(beta, gamma, connect(alpha, beta, a)) != connect(alpha, gamma, a))
            fail(ViolationKind::CompositionViolation, {alpha, beta, gamma, a});
      }

  std::vector<Element> offsets(k + 1, 0);
  for (Element alpha = 0; alpha < k; ++alpha)
    offsets[alpha + 1] = offsets[alpha] + static_cast<Element>(solutions[alpha].order());
  const Element n = offsets.back();
  std::vector<std::pair<Element, Element>> where;
  for (Element alpha = 0; alpha < k; ++alpha)
    for (Element a = 0; a < solutions[alpha].order(); ++a) where.emplace_back(alpha, a);

  std::vector<ElementPair> map;
  map.reserve(std::size_t{n} * n);
  for (Element x = 0; x < n; ++x)
    for (Element z = 0; z < n; ++z) {
      const auto [alpha, a] = where[x];
      const auto [beta, b] = where[z];
      const Element gamma = y.meet(alpha, beta);
      const auto [u, v] = solutions[gamma](connect(alpha, gamma, a), connect(beta, gamma, b));
      map.emplace_back(offsets[gamma] + u, offsets[gamma] + v);
    }
  return SolutionTable(n, std::move(map));
}

}  // namespace wbk
