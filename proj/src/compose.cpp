#include "wbk/compose.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace wbk {

Element StrongSemilatticeSpec::connect(Element alpha, Element beta, Element a) const {
  if (alpha == beta) return a;
  return homs.at({alpha, beta})[a];
}

void validate_spec(const StrongSemilatticeSpec& spec) {
  const auto k = static_cast<Element>(spec.y.size());
  if (spec.braces.size() != k) fail(ViolationKind::OrderMismatch, {}, "one brace per semilattice element");

  for (const auto& [pair, map] : spec.homs) {
    const auto [alpha, beta] = pair;
    if (alpha >= k || beta >= k || alpha == beta || !spec.y.geq(alpha, beta))
      fail(ViolationKind::NotAHom, {alpha, beta}, "pair is not alpha > beta");
    const auto& from = spec.braces[alpha];
    const auto& to = spec.braces[beta];
    if (map.size() != from.order()) fail(ViolationKind::NotAHom, {alpha, beta}, "map is not total");
    for (Element x : map)
      if (x >= to.order()) fail(ViolationKind::NotAHom, {alpha, beta}, "image out of range");
  }
  for (Element alpha = 0; alpha < k; ++alpha)
    for (Element beta = 0; beta < k; ++beta) {
      if (alpha == beta || !spec.y.geq(alpha, beta)) continue;
      auto it = spec.homs.find({alpha, beta});
      if (it == spec.homs.end()) fail(ViolationKind::MissingHom, {alpha, beta});
      const auto& from = spec.braces[alpha];
      const auto& to = spec.braces[beta];
      if (auto w = hom_witness(from.additive().table(), to.additive().table(), it->second))
        fail(ViolationKind::NotAHom, {alpha, beta, w->first, w->second}, "addition");
      if (auto w = hom_witness(from.multiplicative().table(), to.multiplicative().table(), it->second))
        fail(ViolationKind::NotAHom, {alpha, beta, w->first, w->second}, "multiplication");
    }
  for (Element alpha = 0; alpha < k; ++alpha)
    for (Element beta = 0; beta < k; ++beta)
      for (Element gamma = 0; gamma < k; ++gamma) {
        if (alpha == beta || beta == gamma || !spec.y.geq(alpha, beta) || !spec.y.geq(beta, gamma))
          continue;
        for (Element a = 0; a < spec.braces[alpha].order(); ++a)
          if (spec.connect(beta, gamma, spec.connect(alpha, beta, a)) != spec.connect(alpha, gamma, a))
            fail(ViolationKind::CompositionViolation, {alpha, beta, gamma, a});
      }
}

std::vector<Element> component_offsets(const StrongSemilatticeSpec& spec) {
  std::vector<Element> offsets(spec.braces.size() + 1, 0);
  for (std::size_t i = 0; i < spec.braces.size(); ++i)
    offsets[i + 1] = offsets[i] + static_cast<Element>(spec.braces[i].order());
  return offsets;
}

DualWeakBrace compose(const StrongSemilatticeSpec& spec) {
  const auto offsets = component_offsets(spec);
  const std::size_t n = offsets.back();
  std::vector<std::pair<Element, Element>> where;
  where.reserve(n);
  for (Element alpha = 0; alpha < spec.braces.size(); ++alpha)
    for (Element a = 0; a < spec.braces[alpha].order(); ++a) where.emplace_back(alpha, a);

  OpTable add(n), mul(n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      const auto [alpha, a] = where[x];
      const auto [beta, b] = where[y];
      const Element gamma = spec.y.meet(alpha, beta);
      const auto& target = spec.braces[gamma];
      const Element pa = spec.connect(alpha, gamma, a);
      const Element pb = spec.connect(beta, gamma, b);
      add.at(x, y) = offsets[gamma] + target.plus(pa, pb);
      mul.at(x, y) = offsets[gamma] + target.circ(pa, pb);
    }
  return validate_dual_weak_brace(add, mul);
}

Decomposition decompose(const DualWeakBrace& s) {
  const auto& e = s.idempotents();
  const auto k = static_cast<Element>(e.size());
  auto index_of = [&](Element idem) {
    return static_cast<Element>(std::lower_bound(e.begin(), e.end(), idem) - e.begin());
  };

  Decomposition d{.spec = {.y = validate_semilattice(OpTable(1)), .braces = {}, .homs = {}},
                  .location = std::vector<std::pair<Element, Element>>(s.order()),
                  .members = std::vector<std::vector<Element>>(k)};
  try {
    OpTable meet(k);
    for (Element i = 0; i < k; ++i)
      for (Element j = 0; j < k; ++j) meet.at(i, j) = index_of(s.plus(e[i], e[j]));
    d.spec.y = validate_semilattice(meet);

    for (Element x = 0; x < s.order(); ++x) {
      const auto alpha = static_cast<Element>(s.component_of(x));
      d.location[x] = {alpha, static_cast<Element>(d.members[alpha].size())};
      d.members[alpha].push_back(x);
    }
    for (Element alpha = 0; alpha < k; ++alpha) {
      const auto& m = d.members[alpha];
      OpTable add(m.size()), mul(m.size());
      for (Element i = 0; i < m.size(); ++i)
        for (Element j = 0; j < m.size(); ++j) {
          add.at(i, j) = d.location[s.plus(m[i], m[j])].second;
          mul.at(i, j) = d.location[s.circ(m[i], m[j])].second;
        }
      d.spec.braces.push_back(validate_skew_brace(add, mul));
    }
    for (Element alpha = 0; alpha < k; ++alpha)
      for (Element beta = 0; beta < k; ++beta) {
        if (alpha == beta || !d.spec.y.geq(alpha, beta)) continue;
        ElementMap phi;
        for (Element a : d.members[alpha]) {
          const Element pushed = s.plus(a, e[beta]);
          if (pushed != s.circ(a, e[beta]) || d.location[pushed].first != beta)
            fail(ViolationKind::InternalInvariantBroken, {a, e[beta]}, "a + e != a o e");
          phi.push_back(d.location[pushed].second);
        }
        d.spec.homs.emplace(ComponentPair{alpha, beta}, std::move(phi));
      }
    validate_spec(d.spec);
  } catch (const ViolationError& err) {
    if (err.kind() == ViolationKind::InternalInvariantBroken) throw;
    Violation v = err.violation();
    v.cause = v.kind;
    v.kind = ViolationKind::InternalInvariantBroken;
    throw ViolationError(std::move(v));
  }
  return d;
}

bool is_skew_brace_hom(const SkewBrace& a, const SkewBrace& b, const ElementMap& f) {
  return f.size() == a.order() && !hom_witness(a.additive().table(), b.additive().table(), f) &&
         !hom_witness(a.multiplicative().table(), b.multiplicative().table(), f);
}

std::vector<ElementMap> enumerate_skew_brace_homs(const SkewBrace& a, const SkewBrace& b) {
  // Backtracking runs on the multiplicative side; additivity filters.
  std::vector<ElementMap> out;
  for (auto& f : enumerate_group_homs(a.multiplicative(), b.multiplicative()))
    if (!hom_witness(a.additive().table(), b.additive().table(), f)) out.push_back(std::move(f));
  return out;
}

ElementMap global_map(const Decomposition& s, const Decomposition& t, const IsomorphismWitness& w) {
  ElementMap f(s.location.size());
  for (Element x = 0; x < f.size(); ++x) {
    const auto [alpha, local] = s.location[x];
    f[x] = t.members[w.eta[alpha]][w.thetas[alpha][local]];
  }
  return f;
}

namespace {

struct ComponentInvariant {
  std::size_t order;
  std::size_t exponent;
  friend auto operator<=>(const ComponentInvariant&, const ComponentInvariant&) = default;
};

std::vector<ComponentInvariant> invariants(const StrongSemilatticeSpec& spec) {
  std::vector<ComponentInvariant> v;
  for (const auto& b : spec.braces) v.push_back({b.order(), exponent(b.multiplicative())});
  return v;
}

bool is_bijective(const ElementMap& f) {
  std::vector<bool> hit(f.size(), false);
  for (Element x : f) {
    if (x >= f.size() || hit[x]) return false;
    hit[x] = true;
  }
  return true;
}

}  // namespace

std::optional<IsomorphismWitness> are_isomorphic(const DualWeakBrace& s, const DualWeakBrace& t) {
  if (s.order() != t.order()) return std::nullopt;
  const auto ds = decompose(s);
  const auto dt = decompose(t);
  const auto& ys = ds.spec.y;
  const auto& yt = dt.spec.y;
  const auto k = static_cast<Element>(ys.size());
  if (yt.size() != k) return std::nullopt;

  const auto inv_s = invariants(ds.spec);
  const auto inv_t = invariants(dt.spec);
  {
    auto a = inv_s, b = inv_t;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }

  // Skew brace isomorphisms B_alpha -> C_i, computed on demand.
  std::map<std::pair<Element, Element>, std::vector<ElementMap>> iso_cache;
  auto isos = [&](Element alpha, Element i) -> const std::vector<ElementMap>& {
    auto [it, inserted] = iso_cache.try_emplace({alpha, i});
    if (inserted)
      for (auto& f : enumerate_skew_brace_homs(ds.spec.braces[alpha], dt.spec.braces[i]))
        if (is_bijective(f)) it->second.push_back(std::move(f));
    return it->second;
  };

  std::optional<IsomorphismWitness> found;
  std::vector<Element> eta(k);
  std::vector<bool> used(k, false);
  std::vector<ElementMap> thetas(k);

  // Squares between alpha and every earlier component.
  auto square_ok = [&](Element alpha) {
    for (Element beta = 0; beta < alpha; ++beta) {
      Element hi = alpha, lo = beta;
      if (!ys.geq(hi, lo)) std::swap(hi, lo);
      if (!ys.geq(hi, lo)) continue;
      const auto& phi = ds.spec.homs.at({hi, lo});
      const auto& psi = dt.spec.homs.at({eta[hi], eta[lo]});
      for (Element a = 0; a < phi.size(); ++a)
        if (thetas[lo][phi[a]] != psi[thetas[hi][a]]) return false;
    }
    return true;
  };

  std::function<void(Element)> choose_theta = [&](Element alpha) {
    if (found) return;
    if (alpha == k) {
      found = IsomorphismWitness{eta, thetas};
      return;
    }
    for (const auto& f : isos(alpha, eta[alpha])) {
      thetas[alpha] = f;
      if (square_ok(alpha)) choose_theta(alpha + 1);
      if (found) return;
    }
  };

  auto eta_is_semilattice_map = [&](Element upto) {
    for (Element a = 0; a <= upto; ++a)
      for (Element b = 0; b <= upto; ++b) {
        const Element m = ys.meet(a, b);
        if (m <= upto && eta[m] != yt.meet(eta[a], eta[b])) return false;
      }
    return true;
  };

  std::function<void(Element)> choose_eta = [&](Element alpha) {
    if (found) return;
    if (alpha == k) {
      choose_theta(0);
      return;
    }
    for (Element i = 0; i < k; ++i) {
      if (used[i] || inv_s[alpha] != inv_t[i]) continue;
      eta[alpha] = i;
      if (!eta_is_semilattice_map(alpha)) continue;
      used[i] = true;
      choose_eta(alpha + 1);
      used[i] = false;
      if (found) return;
    }
  };
  choose_eta(0);
  if (!found) return std::nullopt;

  const auto f = global_map(ds, dt, *found);
  if (hom_witness(s.additive().table(), t.additive().table(), f) ||
      hom_witness(s.multiplicative().table(), t.multiplicative().table(), f))
    fail(ViolationKind::InternalInvariantBroken, {}, "isomorphism witness does not preserve operations");
  return found;
}

}  // namespace wbk
