#include "wbk/skew_brace.hpp"

#include <algorithm>

namespace wbk {

namespace {

template <class Validated, class Fn>
Validated wrap_side(ViolationKind outer, const char* side, Fn&& fn) {
  try {
    return fn();
  } catch (const ViolationError& e) {
    Violation v = e.violation();
    v.cause = v.kind;
    v.kind = outer;
    v.context = v.context.empty() ? side : std::string(side) + ": " + v.context;
    throw ViolationError(std::move(v));
  }
}

// Smallest (a, b, c) breaking a o (b + c) = a o b - a + a o c.
template <class Structure>
std::optional<std::vector<Element>> compatibility_witness(const Structure& s) {
  const auto n = static_cast<Element>(s.order());
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c) {
        const Element lhs = s.circ(a, s.plus(b, c));
        const Element rhs = s.plus(s.plus(s.circ(a, b), s.neg(a)), s.circ(a, c));
        if (lhs != rhs) return std::vector<Element>{a, b, c};
      }
  return std::nullopt;
}

}  // namespace

SkewBrace validate_skew_brace(const RawTable& add, const RawTable& mul) {
  auto a = wrap_side<OpTable>(ViolationKind::GroupViolation, "add", [&] { return checked_table(add); });
  auto m = wrap_side<OpTable>(ViolationKind::GroupViolation, "mul", [&] { return checked_table(mul); });
  return validate_skew_brace(a, m);
}

SkewBrace validate_skew_brace(const OpTable& add, const OpTable& mul) {
  if (add.size() != mul.size()) fail(ViolationKind::OrderMismatch);
  auto ga = wrap_side<FiniteGroupTable>(ViolationKind::GroupViolation, "add",
                                        [&] { return validate_group(add); });
  auto gm = wrap_side<FiniteGroupTable>(ViolationKind::GroupViolation, "mul",
                                        [&] { return validate_group(mul); });
  if (ga.identity() != gm.identity())
    fail(ViolationKind::IdentityMismatch, {ga.identity(), gm.identity()});
  SkewBrace b(std::move(ga), std::move(gm));
  if (auto w = compatibility_witness(b)) fail(ViolationKind::CompatibilityViolation, *w);
  return b;
}

DualWeakBrace::DualWeakBrace(CliffordTable add, CliffordTable mul)
    : add_(std::move(add)), mul_(std::move(mul)), component_of_(add_.order()) {
  const auto& e = add_.idempotents();
  for (Element a = 0; a < order(); ++a) {
    const Element z = plus(a, neg(a));
    component_of_[a] = static_cast<std::size_t>(std::lower_bound(e.begin(), e.end(), z) - e.begin());
  }
}

DualWeakBrace validate_dual_weak_brace(const RawTable& add, const RawTable& mul) {
  auto a = wrap_side<OpTable>(ViolationKind::CliffordViolation, "add", [&] { return checked_table(add); });
  auto m = wrap_side<OpTable>(ViolationKind::CliffordViolation, "mul", [&] { return checked_table(mul); });
  return validate_dual_weak_brace(a, m);
}

DualWeakBrace validate_dual_weak_brace(const OpTable& add, const OpTable& mul) {
  if (add.size() != mul.size()) fail(ViolationKind::OrderMismatch);
  auto ca = wrap_side<CliffordTable>(ViolationKind::CliffordViolation, "add",
                                     [&] { return validate_clifford(add); });
  auto cm = wrap_side<CliffordTable>(ViolationKind::CliffordViolation, "mul",
                                     [&] { return validate_clifford(mul); });
  if (ca.idempotents() != cm.idempotents()) {
    std::vector<Element> diff;
    std::set_symmetric_difference(ca.idempotents().begin(), ca.idempotents().end(),
                                  cm.idempotents().begin(), cm.idempotents().end(),
                                  std::back_inserter(diff));
    fail(ViolationKind::IdempotentSetMismatch, {diff.front()});
  }
  DualWeakBrace s(std::move(ca), std::move(cm));
  if (auto w = compatibility_witness(s)) fail(ViolationKind::CompatibilityViolation, *w);
  for (Element a = 0; a < s.order(); ++a) {
    // a o a^- = -a + a; in a Clifford semigroup -a + a = a - a.
    if (s.circ(a, s.circ_inverse(a)) != s.plus(s.neg(a), a))
      fail(ViolationKind::SecondAxiomViolation, {a});
  }
  return s;
}

DualWeakBrace as_dual_weak_brace(const SkewBrace& b) {
  return validate_dual_weak_brace(b.additive().table(), b.multiplicative().table());
}

DualWeakBrace trivial_weak_brace(const CliffordTable& c) {
  return validate_dual_weak_brace(c.table(), c.table());
}

Element lambda(const DualWeakBrace& s, Element a, Element b) {
  return s.plus(s.neg(a), s.circ(a, b));
}

Element rho(const DualWeakBrace& s, Element b, Element a) {
  return s.circ(s.circ(s.circ_inverse(lambda(s, a, b)), a), b);
}

Element dot(const DualWeakBrace& s, Element a, Element b) {
  return s.minus(lambda(s, a, b), b);
}

Element add_commutator(const DualWeakBrace& s, Element a, Element b) {
  return s.plus(s.plus(s.plus(s.neg(a), s.neg(b)), a), b);
}

Element zero_part(const DualWeakBrace& s, Element a) { return s.minus(a, a); }

DualWeakBrace opposite(const DualWeakBrace& s) {
  try {
    return validate_dual_weak_brace(s.additive().table().transposed(), s.multiplicative().table());
  } catch (const ViolationError& e) {
    Violation v = e.violation();
    v.cause = v.kind;
    v.kind = ViolationKind::OppositeNotWeakBrace;
    throw ViolationError(std::move(v));
  }
}

}  // namespace wbk
