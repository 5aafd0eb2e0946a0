#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "wbk/core.hpp"

namespace wbk {

class FiniteGroupTable;
class SemilatticeTable;
class CliffordTable;

FiniteGroupTable validate_group(const RawTable& raw);
FiniteGroupTable validate_group(const OpTable& table);
CliffordTable validate_clifford(const RawTable& raw);
CliffordTable validate_clifford(const OpTable& table);
SemilatticeTable validate_semilattice(const RawTable& raw);
SemilatticeTable validate_semilattice(const OpTable& table);

/// A finite group given by its Cayley table. Only obtainable through
/// validate_group, so every instance satisfies the group axioms.
class FiniteGroupTable {
 public:
  std::size_t order() const { return op_.size(); }
  Element op(Element a, Element b) const { return op_(a, b); }
  Element identity() const { return identity_; }
  Element inverse(Element a) const { return inverse_[a]; }
  const OpTable& table() const { return op_; }

  friend bool operator==(const FiniteGroupTable& x, const FiniteGroupTable& y) {
    return x.op_ == y.op_;
  }

 private:
  friend FiniteGroupTable validate_group(const OpTable&);
  FiniteGroupTable() = default;

  OpTable op_;
  Element identity_ = 0;
  std::vector<Element> inverse_;
};

/// A meet-semilattice. `geq(a, b)` is the induced order a >= b.
class SemilatticeTable {
 public:
  std::size_t size() const { return meet_.size(); }
  Element meet(Element a, Element b) const { return meet_(a, b); }
  bool geq(Element a, Element b) const { return meet_(a, b) == b; }
  const OpTable& table() const { return meet_; }

  friend bool operator==(const SemilatticeTable& x, const SemilatticeTable& y) {
    return x.meet_ == y.meet_;
  }

 private:
  friend SemilatticeTable validate_semilattice(const OpTable&);
  SemilatticeTable() = default;

  OpTable meet_;
};

/// An inverse semigroup whose idempotents are central.
class CliffordTable {
 public:
  std::size_t order() const { return op_.size(); }
  Element op(Element a, Element b) const { return op_(a, b); }
  Element inverse(Element a) const { return inverse_[a]; }
  /// Sorted list of idempotents.
  const std::vector<Element>& idempotents() const { return idempotents_; }
  bool is_idempotent(Element a) const { return op_(a, a) == a; }
  const OpTable& table() const { return op_; }

  friend bool operator==(const CliffordTable& x, const CliffordTable& y) {
    return x.op_ == y.op_;
  }

 private:
  friend CliffordTable validate_clifford(const OpTable&);
  CliffordTable() = default;

  OpTable op_;
  std::vector<Element> inverse_;
  std::vector<Element> idempotents_;
};

CliffordTable as_clifford(const FiniteGroupTable& g);
CliffordTable as_clifford(const SemilatticeTable& y);

/// Smallest (a, b, c) with (ab)c != a(bc), if any.
std::optional<std::vector<Element>> associativity_witness(const OpTable& t);

/// Closure of `seed` under the group operation; always contains the identity.
std::vector<Element> subgroup_closure(const FiniteGroupTable& g, std::span<const Element> seed);

/// Greedy generating set: repeatedly adds the smallest element outside the
/// current closure.
std::vector<Element> generating_set(const FiniteGroupTable& g);

/// Smallest pair (x, y) with f(xy) != f(x)f(y), or nullopt when f is a hom.
std::optional<std::pair<Element, Element>> hom_witness(const OpTable& from, const OpTable& to,
                                                       const ElementMap& f);

/// All group homomorphisms a -> b in lexicographic order of their image lists.
std::vector<ElementMap> enumerate_group_homs(const FiniteGroupTable& a, const FiniteGroupTable& b);

/// Order of the element x in g.
std::size_t element_order(const FiniteGroupTable& g, Element x);

/// Least common multiple of all element orders.
std::size_t exponent(const FiniteGroupTable& g);

}  // namespace wbk
