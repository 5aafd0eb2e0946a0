#include "wbk/ideals.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>

namespace wbk {

Subset idempotent_set(const DualWeakBrace& s) { return Subset(s.order(), s.idempotents()); }

namespace {

Element op(const DualWeakBrace& s, Side side, Element a, Element b) {
  return side == Side::Add ? s.plus(a, b) : s.circ(a, b);
}

Element inv(const DualWeakBrace& s, Side side, Element a) {
  return side == Side::Add ? s.neg(a) : s.circ_inverse(a);
}

PredicateResult full_and_closed(const DualWeakBrace& s, const Subset& x, Side side) {
  for (Element e : s.idempotents())
    if (!x.contains(e)) return PredicateResult::no("not full", {e});
  const auto members = x.elements();
  for (Element a : members)
    for (Element b : members)
      if (!x.contains(op(s, side, a, b))) return PredicateResult::no("not closed", {a, b});
  for (Element a : members)
    if (!x.contains(inv(s, side, a))) return PredicateResult::no("not closed under inverse", {a});
  return PredicateResult::yes();
}

template <class Pred>
Subset filter(const DualWeakBrace& s, Pred&& keep) {
  Subset out(s.order());
  for (Element a = 0; a < s.order(); ++a)
    if (keep(a)) out.insert(a);
  return out;
}

// Worklist closure: `grow(x, emit)` emits everything x forces given the
// current members; pairwise rules see each pair once both are present.
template <class Grow>
Subset close(const DualWeakBrace& s, const Subset& seed, Grow&& grow) {
  Subset in = seed | idempotent_set(s);
  std::vector<Element> members = in.elements();
  std::vector<Element> work = members;
  auto emit = [&](Element y) {
    if (!in.contains(y)) {
      in.insert(y);
      members.push_back(y);
      work.push_back(y);
    }
  };
  while (!work.empty()) {
    const Element x = work.back();
    work.pop_back();
    grow(x, members, emit);
  }
  return in;
}

}  // namespace

PredicateResult is_full_inverse_subsemigroup_add(const DualWeakBrace& s, const Subset& x) {
  return full_and_closed(s, x, Side::Add);
}

PredicateResult is_normal_subsemigroup(const DualWeakBrace& s, const Subset& x, Side side) {
  if (auto r = full_and_closed(s, x, side); !r) return r;
  const auto members = x.elements();
  for (Element a = 0; a < s.order(); ++a)
    for (Element m : members)
      if (!x.contains(op(s, side, op(s, side, inv(s, side, a), m), a)))
        return PredicateResult::no("not normal", {a, m});
  return PredicateResult::yes();
}

PredicateResult is_lambda_invariant(const DualWeakBrace& s, const Subset& x) {
  const auto members = x.elements();
  for (Element a = 0; a < s.order(); ++a)
    for (Element m : members)
      if (!x.contains(lambda(s, a, m))) return PredicateResult::no("not lambda-invariant", {a, m});
  return PredicateResult::yes();
}

PredicateResult is_left_ideal(const DualWeakBrace& s, const Subset& x) {
  if (auto r = is_full_inverse_subsemigroup_add(s, x); !r) return r;
  return is_lambda_invariant(s, x);
}

PredicateResult is_strong_left_ideal(const DualWeakBrace& s, const Subset& x) {
  if (auto r = is_left_ideal(s, x); !r) return r;
  return is_normal_subsemigroup(s, x, Side::Add);
}

PredicateResult is_ideal(const DualWeakBrace& s, const Subset& x) {
  if (auto r = is_normal_subsemigroup(s, x, Side::Add); !r) return r;
  if (auto r = is_lambda_invariant(s, x); !r) return r;
  return is_normal_subsemigroup(s, x, Side::Mul);
}

IdealTier ideal_tier(const DualWeakBrace& s, const Subset& x) {
  if (is_ideal(s, x)) return IdealTier::Ideal;
  if (is_strong_left_ideal(s, x)) return IdealTier::StrongLeft;
  if (is_left_ideal(s, x)) return IdealTier::Left;
  return IdealTier::None;
}

std::string_view tier_tag(IdealTier t) {
  switch (t) {
    case IdealTier::Ideal: return "I";
    case IdealTier::StrongLeft: return "SL";
    case IdealTier::Left: return "L";
    case IdealTier::None: return "-";
  }
  return "-";
}

Subset additive_center(const DualWeakBrace& s) {
  return filter(s, [&](Element a) {
    for (Element b = 0; b < s.order(); ++b)
      if (s.plus(a, b) != s.plus(b, a)) return false;
    return true;
  });
}

Subset multiplicative_center(const DualWeakBrace& s) {
  return filter(s, [&](Element a) {
    for (Element b = 0; b < s.order(); ++b)
      if (s.circ(a, b) != s.circ(b, a)) return false;
    return true;
  });
}

Subset socle(const DualWeakBrace& s) {
  return filter(s, [&](Element a) {
    for (Element b = 0; b < s.order(); ++b)
      if (s.plus(a, b) != s.circ(a, b) || s.plus(a, b) != s.plus(b, a)) return false;
    return true;
  });
}

Subset fix(const DualWeakBrace& s) {
  return filter(s, [&](Element b) {
    for (Element a = 0; a < s.order(); ++a)
      if (s.plus(a, b) != s.circ(a, b)) return false;
    return true;
  });
}

Subset left_center(const DualWeakBrace& s) { return fix(s) & additive_center(s); }

Subset annihilator(const DualWeakBrace& s) { return socle(s) & multiplicative_center(s); }

Subset generated_full_inverse_subsemigroup(const DualWeakBrace& s, const Subset& seed) {
  return close(s, seed, [&](Element x, const std::vector<Element>& members, auto& emit) {
    emit(s.neg(x));
    for (std::size_t i = 0; i < members.size(); ++i) {
      const Element y = members[i];
      emit(s.plus(x, y));
      emit(s.plus(y, x));
    }
  });
}

Subset product_set(const DualWeakBrace& s, const Subset& x, const Subset& y) {
  Subset seed(s.order());
  for (Element a : x.elements())
    for (Element b : y.elements()) seed.insert(dot(s, a, b));
  return generated_full_inverse_subsemigroup(s, seed);
}

Subset commutator_set(const DualWeakBrace& s, const Subset& x, const Subset& y) {
  Subset seed(s.order());
  for (Element a : x.elements())
    for (Element b : y.elements()) seed.insert(add_commutator(s, a, b));
  return generated_full_inverse_subsemigroup(s, seed);
}

Subset sum_set(const DualWeakBrace& s, const Subset& x, const Subset& y) {
  Subset out(s.order());
  for (Element a : x.elements())
    for (Element b : y.elements()) out.insert(s.plus(a, b));
  return out;
}

Subset sum_of_ideals(const DualWeakBrace& s, const Subset& i, const Subset& j) {
  if (auto r = is_ideal(s, i); !r) fail(ViolationKind::NotAnIdeal, r.witness, "first argument: " + r.reason);
  if (auto r = is_ideal(s, j); !r) fail(ViolationKind::NotAnIdeal, r.witness, "second argument: " + r.reason);
  Subset sum = sum_set(s, i, j);
  Subset circ(s.order());
  for (Element a : i.elements())
    for (Element b : j.elements()) circ.insert(s.circ(a, b));
  if (sum != circ) fail(ViolationKind::SumCircMismatch);
  if (!is_ideal(s, sum)) fail(ViolationKind::InternalInvariantBroken, {}, "I + J is not an ideal");
  return sum;
}

Subset ideal_closure(const DualWeakBrace& s, const Subset& seed) {
  const auto n = static_cast<Element>(s.order());
  return close(s, seed, [&](Element x, const std::vector<Element>& members, auto& emit) {
    emit(s.neg(x));
    emit(s.circ_inverse(x));
    for (std::size_t i = 0; i < members.size(); ++i) {
      const Element y = members[i];
      emit(s.plus(x, y));
      emit(s.plus(y, x));
      emit(s.circ(x, y));
      emit(s.circ(y, x));
    }
    for (Element a = 0; a < n; ++a) {
      emit(lambda(s, a, x));
      emit(s.plus(s.plus(s.neg(a), x), a));
      emit(s.circ(s.circ(s.circ_inverse(a), x), a));
    }
  });
}

QuotientStructure quotient(const DualWeakBrace& s, const Subset& i) {
  if (auto r = is_ideal(s, i); !r) fail(ViolationKind::NotAnIdeal, r.witness, r.reason);
  const auto n = static_cast<Element>(s.order());
  constexpr Element kUnassigned = ~Element{0};
  ElementMap projection(n, kUnassigned);
  std::vector<Element> reps;
  for (Element a = 0; a < n; ++a) {
    if (projection[a] != kUnassigned) continue;
    const auto c = static_cast<Element>(reps.size());
    reps.push_back(a);
    for (Element b = a; b < n; ++b)
      if (projection[b] == kUnassigned && zero_part(s, a) == zero_part(s, b) &&
          i.contains(s.plus(s.neg(a), b)))
        projection[b] = c;
  }
  const auto k = static_cast<Element>(reps.size());
  OpTable add(k), mul(k);
  for (Element x = 0; x < k; ++x)
    for (Element y = 0; y < k; ++y) {
      add.at(x, y) = projection[s.plus(reps[x], reps[y])];
      mul.at(x, y) = projection[s.circ(reps[x], reps[y])];
    }
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (projection[s.plus(a, b)] != add(projection[a], projection[b]) ||
          projection[s.circ(a, b)] != mul(projection[a], projection[b]))
        fail(ViolationKind::InternalInvariantBroken, {a, b}, "relation is not a congruence");
  return QuotientStructure{validate_dual_weak_brace(add, mul), std::move(projection), std::move(reps)};
}

Subset pullback(const QuotientStructure& q, const Subset& in_quotient) {
  Subset out(q.projection.size());
  for (Element a = 0; a < q.projection.size(); ++a)
    if (in_quotient.contains(q.projection[a])) out.insert(a);
  return out;
}

Subset project(const QuotientStructure& q, const Subset& ambient) {
  Subset out(q.quotient.order());
  for (Element a : ambient.elements()) out.insert(q.projection[a]);
  return out;
}

Substructure restrict_to(const DualWeakBrace& s, const Subset& h) {
  const auto members = h.elements();
  for (Element a : members) {
    if (!h.contains(s.neg(a)) || !h.contains(s.circ_inverse(a)))
      fail(ViolationKind::NotClosed, {a}, "subset not closed under inverses");
    for (Element b : members)
      if (!h.contains(s.plus(a, b)) || !h.contains(s.circ(a, b)))
        fail(ViolationKind::NotClosed, {a, b}, "subset not closed under the operations");
  }
  std::vector<Element> local(s.order(), 0);
  for (Element i = 0; i < members.size(); ++i) local[members[i]] = i;
  const std::size_t k = members.size();
  OpTable add(k), mul(k);
  for (Element i = 0; i < k; ++i)
    for (Element j = 0; j < k; ++j) {
      add.at(i, j) = local[s.plus(members[i], members[j])];
      mul.at(i, j) = local[s.circ(members[i], members[j])];
    }
  return Substructure{validate_dual_weak_brace(add, mul), members};
}

std::optional<std::vector<Element>> dwb_hom_witness(const DualWeakBrace& s, const DualWeakBrace& t,
                                                    const ElementMap& f) {
  if (f.size() != s.order()) return std::vector<Element>{};
  for (Element x : f)
    if (x >= t.order()) return std::vector<Element>{x};
  if (auto w = hom_witness(s.additive().table(), t.additive().table(), f))
    return std::vector<Element>{w->first, w->second};
  if (auto w = hom_witness(s.multiplicative().table(), t.multiplicative().table(), f))
    return std::vector<Element>{w->first, w->second};
  return std::nullopt;
}

Subset kernel(const DualWeakBrace& s, const DualWeakBrace& t, const ElementMap& f) {
  if (auto w = dwb_hom_witness(s, t, f)) fail(ViolationKind::NotAHom, *w);
  Subset idempotent_images(t.order());
  for (Element e : s.idempotents()) idempotent_images.insert(f[e]);
  return filter(s, [&](Element a) { return idempotent_images.contains(f[a]); });
}

Subset image(const DualWeakBrace& s, const DualWeakBrace& t, const ElementMap& f) {
  if (auto w = dwb_hom_witness(s, t, f)) fail(ViolationKind::NotAHom, *w);
  Subset out(t.order());
  for (Element x : f) out.insert(x);
  return out;
}

PredicateResult is_sub_brace(const DualWeakBrace& s, const Subset& h, bool strict) {
  const auto members = h.elements();
  if (members.empty()) return PredicateResult::no("empty", {});
  if (strict) {
    for (Element e : s.idempotents())
      if (!h.contains(e)) return PredicateResult::no("does not contain E(S)", {e});
  }
  for (Element a : members) {
    if (!h.contains(s.neg(a)) || !h.contains(s.circ_inverse(a)))
      return PredicateResult::no("not closed under inverses", {a});
    if (!h.contains(zero_part(s, a))) return PredicateResult::no("missing zero part", {a});
    for (Element b : members)
      if (!h.contains(s.plus(a, b)) || !h.contains(s.circ(a, b)))
        return PredicateResult::no("not closed", {a, b});
  }
  return PredicateResult::yes();
}

FirstIsomorphismReport first_isomorphism_check(const DualWeakBrace& s, const DualWeakBrace& t,
                                               const ElementMap& f) {
  FirstIsomorphismReport report;
  report.kernel = kernel(s, t, f);
  const auto q = quotient(s, report.kernel);
  report.induced.resize(q.quotient.order());
  for (Element c = 0; c < q.quotient.order(); ++c) report.induced[c] = f[q.class_rep[c]];

  report.well_defined = true;
  for (Element a = 0; a < s.order(); ++a)
    if (report.induced[q.projection[a]] != f[a]) report.well_defined = false;
  report.induced_is_hom = !dwb_hom_witness(q.quotient, t, report.induced).has_value();
  std::set<Element> distinct(report.induced.begin(), report.induced.end());
  report.injective = distinct.size() == report.induced.size();
  report.same_image = Subset(t.order(), report.induced) == image(s, t, f);
  return report;
}

std::string_view to_string(EnumerationMode m) {
  return m == EnumerationMode::Exhaustive ? "exhaustive" : "closure";
}

std::size_t default_max_order() {
  if (const char* env = std::getenv("WBK_MAX_ORDER")) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 24;
}

IdealEnumeration enumerate_ideals(const DualWeakBrace& s, const IdealEnumerationOptions& options) {
  const std::size_t max_order = options.max_order ? options.max_order : default_max_order();
  const std::size_t n = s.order();
  if (n > max_order)
    fail(ViolationKind::OrderTooLarge, {static_cast<Element>(n)},
         "order exceeds the enumeration bound " + std::to_string(max_order));
  const EnumerationMode mode = options.force.value_or(
      n <= options.exhaustive_bound ? EnumerationMode::Exhaustive : EnumerationMode::Closure);

  std::vector<Subset> found;
  const Subset e = idempotent_set(s);
  if (mode == EnumerationMode::Exhaustive) {
    std::vector<Element> free;
    for (Element a = 0; a < n; ++a)
      if (!e.contains(a)) free.push_back(a);
    if (free.size() >= 63) fail(ViolationKind::OrderTooLarge, {static_cast<Element>(n)});
    const std::uint64_t count = std::uint64_t{1} << free.size();
    for (std::uint64_t mask = 0; mask < count; ++mask) {
      Subset candidate = e;
      for (std::size_t i = 0; i < free.size(); ++i)
        if ((mask >> i) & 1u) candidate.insert(free[i]);
      if (is_ideal(s, candidate)) found.push_back(std::move(candidate));
    }
  } else {
    // Every ideal is the join of the principal ideals of its elements, and
    // the join of two ideals is the ideal generated by their union.
    std::set<Subset> ideals;
    for (Element a = 0; a < n; ++a) ideals.insert(ideal_closure(s, Subset(n, {a})));
    ideals.insert(ideal_closure(s, e));
    std::vector<Subset> frontier(ideals.begin(), ideals.end());
    const std::vector<Subset> principal = frontier;
    while (!frontier.empty()) {
      std::vector<Subset> next;
      for (const auto& i : frontier)
        for (const auto& p : principal) {
          auto j = ideal_closure(s, i | p);
          if (ideals.insert(j).second) next.push_back(std::move(j));
        }
      frontier = std::move(next);
    }
    found.assign(ideals.begin(), ideals.end());
  }
  std::sort(found.begin(), found.end());
  return IdealEnumeration{std::move(found), mode};
}

IdealDecomposition ideal_decomposition(const DualWeakBrace& s, const Subset& i) {
  if (auto r = is_ideal(s, i); !r) fail(ViolationKind::NotAnIdeal, r.witness, r.reason);
  IdealDecomposition out{decompose(s), {}, {}, true};
  const auto& d = out.decomposition;
  const auto k = static_cast<Element>(d.members.size());
  for (Element alpha = 0; alpha < k; ++alpha) {
    Subset part(d.members[alpha].size());
    for (Element x : d.members[alpha])
      if (i.contains(x)) part.insert(d.location[x].second);
    out.part_is_ideal.push_back(
        static_cast<bool>(is_ideal(as_dual_weak_brace(d.spec.braces[alpha]), part)));
    out.parts.push_back(std::move(part));
  }
  for (const auto& [pair, phi] : d.spec.homs)
    for (Element a : out.parts[pair.first].elements())
      if (!out.parts[pair.second].contains(phi[a])) out.maps_compatible = false;
  return out;
}

}  // namespace wbk
