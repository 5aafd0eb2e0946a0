#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "wbk/compose.hpp"

namespace wbk {

using ElementPair = std::pair<Element, Element>;

/// A total map r: X x X -> X x X, tabulated row-major by (a, b).
class SolutionTable {
 public:
  SolutionTable() = default;
  SolutionTable(std::size_t order, std::vector<ElementPair> map);

  /// Identity map on pairs.
  static SolutionTable identity(std::size_t order);

  std::size_t order() const { return order_; }
  const ElementPair& operator()(Element a, Element b) const { return map_[a * order_ + b]; }
  const ElementPair& operator()(const ElementPair& p) const { return (*this)(p.first, p.second); }
  const std::vector<ElementPair>& entries() const { return map_; }

  friend bool operator==(const SolutionTable&, const SolutionTable&) = default;

 private:
  std::size_t order_ = 0;
  std::vector<ElementPair> map_;
};

/// (f o g)(x) = f(g(x)) as pair maps.
SolutionTable then(const SolutionTable& g, const SolutionTable& f);
inline SolutionTable operator*(const SolutionTable& f, const SolutionTable& g) { return then(g, f); }

SolutionTable power(const SolutionTable& r, std::size_t k);

/// r(a, b) = (lambda_a(b), rho_b(a)).
SolutionTable solution_of(const DualWeakBrace& s);

struct BraidReport {
  std::size_t triples_checked = 0;
  std::optional<std::vector<Element>> witness;
  bool holds() const { return !witness.has_value(); }
};

/// Checks (r x id)(id x r)(r x id) = (id x r)(r x id)(id x r) on every
/// triple; the witness is the smallest failing triple.
BraidReport check_braid(const SolutionTable& r);

struct WeakInverseReport {
  bool r_rop_r = false;
  bool rop_r_rop = false;
  bool commute = false;
  /// Set only when the structure has a single idempotent.
  std::optional<bool> rop_is_inverse;
  bool r_bijective = false;
  std::size_t image_size = 0;
  bool holds() const { return r_rop_r && rop_r_rop && commute && rop_is_inverse.value_or(true); }
};

WeakInverseReport check_weak_inverses(const DualWeakBrace& s);

struct RegularityReport {
  /// First element a failing one of the six identities, with the failing
  /// identity's name.
  std::optional<std::pair<Element, std::string>> failure;
  /// Per-element bijectivity of lambda_a and rho_a (diagnostic only).
  std::vector<bool> lambda_bijective;
  std::vector<bool> rho_bijective;
  bool holds() const { return !failure.has_value(); }
};

RegularityReport check_regularity(const DualWeakBrace& s);

/// Smallest p >= 1 with r^{p+1} = r. Throws NoPeriod when r never recurs.
std::size_t period(const SolutionTable& r);

/// Glues solutions r_alpha on the components of Y along maps
/// phi_{alpha,beta}; the result lives on the disjoint union laid out in
/// semilattice order.
SolutionTable strong_semilattice_of_solutions(const SemilatticeTable& y,
                                              const std::vector<SolutionTable>& solutions,
                                              const std::map<ComponentPair, ElementMap>& maps);

}  // namespace wbk
