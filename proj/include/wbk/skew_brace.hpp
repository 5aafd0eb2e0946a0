#pragma once

#include <vector>

#include "wbk/algebra.hpp"

namespace wbk {

class SkewBrace;
class DualWeakBrace;

SkewBrace validate_skew_brace(const RawTable& add, const RawTable& mul);
SkewBrace validate_skew_brace(const OpTable& add, const OpTable& mul);
DualWeakBrace validate_dual_weak_brace(const RawTable& add, const RawTable& mul);
DualWeakBrace validate_dual_weak_brace(const OpTable& add, const OpTable& mul);

/// Two group structures on one element set sharing the identity and
/// satisfying a o (b + c) = a o b - a + a o c.
class SkewBrace {
 public:
  std::size_t order() const { return add_.order(); }
  const FiniteGroupTable& additive() const { return add_; }
  const FiniteGroupTable& multiplicative() const { return mul_; }
  Element identity() const { return add_.identity(); }

  Element plus(Element a, Element b) const { return add_.op(a, b); }
  Element circ(Element a, Element b) const { return mul_.op(a, b); }
  Element neg(Element a) const { return add_.inverse(a); }
  Element circ_inverse(Element a) const { return mul_.inverse(a); }

  friend bool operator==(const SkewBrace&, const SkewBrace&) = default;

 private:
  friend SkewBrace validate_skew_brace(const OpTable&, const OpTable&);
  SkewBrace(FiniteGroupTable add, FiniteGroupTable mul) : add_(std::move(add)), mul_(std::move(mul)) {}

  FiniteGroupTable add_;
  FiniteGroupTable mul_;
};

/// A weak brace whose additive and multiplicative semigroups are both
/// Clifford. Elements are tagged with the index of their component, i.e. the
/// position of a^0 in the sorted idempotent list.
class DualWeakBrace {
 public:
  std::size_t order() const { return add_.order(); }
  const CliffordTable& additive() const { return add_; }
  const CliffordTable& multiplicative() const { return mul_; }
  const std::vector<Element>& idempotents() const { return add_.idempotents(); }
  bool is_idempotent(Element a) const { return add_.is_idempotent(a); }
  std::size_t component_of(Element a) const { return component_of_[a]; }

  Element plus(Element a, Element b) const { return add_.op(a, b); }
  Element circ(Element a, Element b) const { return mul_.op(a, b); }
  Element neg(Element a) const { return add_.inverse(a); }
  Element circ_inverse(Element a) const { return mul_.inverse(a); }
  /// a - b, i.e. a + (-b).
  Element minus(Element a, Element b) const { return plus(a, neg(b)); }

  friend bool operator==(const DualWeakBrace& x, const DualWeakBrace& y) {
    return x.add_ == y.add_ && x.mul_ == y.mul_;
  }

 private:
  friend DualWeakBrace validate_dual_weak_brace(const OpTable&, const OpTable&);
  DualWeakBrace(CliffordTable add, CliffordTable mul);

  CliffordTable add_;
  CliffordTable mul_;
  std::vector<std::size_t> component_of_;
};

DualWeakBrace as_dual_weak_brace(const SkewBrace& b);

/// The weak brace with a + b = a o b on a Clifford semigroup.
DualWeakBrace trivial_weak_brace(const CliffordTable& c);

/// lambda_a(b) = -a + a o b.
Element lambda(const DualWeakBrace& s, Element a, Element b);
/// rho_b(a) = (lambda_a(b))^- o a o b.
Element rho(const DualWeakBrace& s, Element b, Element a);
/// a . b = -a + a o b - b.
Element dot(const DualWeakBrace& s, Element a, Element b);
/// [a, b]_+ = -a - b + a + b.
Element add_commutator(const DualWeakBrace& s, Element a, Element b);
/// a^0 = a - a.
Element zero_part(const DualWeakBrace& s, Element a);

/// The opposite weak brace: addition transposed, multiplication unchanged.
DualWeakBrace opposite(const DualWeakBrace& s);

}  // namespace wbk
