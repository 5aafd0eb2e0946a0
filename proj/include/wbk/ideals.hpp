#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wbk/compose.hpp"
#include "wbk/subset.hpp"

namespace wbk {

/// Outcome of a structural predicate. `witness` holds the first offending
/// elements in the order documented by each predicate.
struct PredicateResult {
  bool holds = true;
  std::string reason;
  std::vector<Element> witness;

  explicit operator bool() const { return holds; }
  static PredicateResult yes() { return {}; }
  static PredicateResult no(std::string reason, std::vector<Element> witness) {
    return {false, std::move(reason), std::move(witness)};
  }
};

enum class Side { Add, Mul };

Subset idempotent_set(const DualWeakBrace& s);

/// E(S) subset of x and x closed under + and additive inverse.
PredicateResult is_full_inverse_subsemigroup_add(const DualWeakBrace& s, const Subset& x);

/// Full, closed under the chosen operation and its inverse, and stable under
/// conjugation a^{-1} x a; the conjugation witness is (a, x).
PredicateResult is_normal_subsemigroup(const DualWeakBrace& s, const Subset& x, Side side);

/// lambda_a(x) in I for all a in S, x in I; witness (a, x).
PredicateResult is_lambda_invariant(const DualWeakBrace& s, const Subset& x);

PredicateResult is_left_ideal(const DualWeakBrace& s, const Subset& x);
PredicateResult is_strong_left_ideal(const DualWeakBrace& s, const Subset& x);
PredicateResult is_ideal(const DualWeakBrace& s, const Subset& x);

enum class IdealTier { None, Left, StrongLeft, Ideal };
IdealTier ideal_tier(const DualWeakBrace& s, const Subset& x);
std::string_view tier_tag(IdealTier t);

Subset additive_center(const DualWeakBrace& s);
Subset multiplicative_center(const DualWeakBrace& s);

/// Elements a with a + b = a o b and a + b = b + a for every b.
Subset socle(const DualWeakBrace& s);
/// Elements b with a + b = a o b for every a.
Subset fix(const DualWeakBrace& s);
/// Fix(S) intersected with the centre of (S, +).
Subset left_center(const DualWeakBrace& s);
/// Soc(S) intersected with the centre of (S, o).
Subset annihilator(const DualWeakBrace& s);

/// Least superset of seed and E(S) closed under + and additive inverse.
Subset generated_full_inverse_subsemigroup(const DualWeakBrace& s, const Subset& seed);

/// X . Y: generated by the dots x . y (seeded with E(S)).
Subset product_set(const DualWeakBrace& s, const Subset& x, const Subset& y);

/// [X, Y]_+: generated by the additive commutators [x, y]_+.
Subset commutator_set(const DualWeakBrace& s, const Subset& x, const Subset& y);

/// {a + b : a in X, b in Y}.
Subset sum_set(const DualWeakBrace& s, const Subset& x, const Subset& y);

/// I + J for ideals; throws NotAnIdeal on non-ideal input and
/// SumCircMismatch if I + J differs from I o J.
Subset sum_of_ideals(const DualWeakBrace& s, const Subset& i, const Subset& j);

/// Smallest ideal containing seed.
Subset ideal_closure(const DualWeakBrace& s, const Subset& seed);

struct QuotientStructure {
  DualWeakBrace quotient;
  ElementMap projection;
  /// Least ambient representative of each class, ascending.
  std::vector<Element> class_rep;
};

QuotientStructure quotient(const DualWeakBrace& s, const Subset& i);

/// Preimage of a subset of the quotient.
Subset pullback(const QuotientStructure& q, const Subset& in_quotient);
/// Image of an ambient subset in the quotient.
Subset project(const QuotientStructure& q, const Subset& ambient);

/// A sub-structure closed under both operations and both inverses,
/// reindexed densely; `embedding[i]` is the ambient element of local i.
struct Substructure {
  DualWeakBrace structure;
  ElementMap embedding;
};

Substructure restrict_to(const DualWeakBrace& s, const Subset& h);

/// Smallest failing pair for f(x + y) = f(x) + f(y) or f(x o y) = f(x) o f(y).
std::optional<std::vector<Element>> dwb_hom_witness(const DualWeakBrace& s, const DualWeakBrace& t,
                                                    const ElementMap& f);

/// {a : f(a) = f(e) for some idempotent e}. Throws NotAHom.
Subset kernel(const DualWeakBrace& s, const DualWeakBrace& t, const ElementMap& f);
/// f(S). Throws NotAHom.
Subset image(const DualWeakBrace& s, const DualWeakBrace& t, const ElementMap& f);

/// Closed under +, o, -, ^- and containing the zero part of each member.
/// With `strict` the subset must contain all of E(S) instead.
PredicateResult is_sub_brace(const DualWeakBrace& s, const Subset& h, bool strict = false);

struct FirstIsomorphismReport {
  Subset kernel;
  ElementMap induced;  // S/ker f -> T
  bool well_defined = false;
  bool induced_is_hom = false;
  bool injective = false;
  bool same_image = false;
  bool holds() const { return well_defined && induced_is_hom && injective && same_image; }
};

FirstIsomorphismReport first_isomorphism_check(const DualWeakBrace& s, const DualWeakBrace& t,
                                               const ElementMap& f);

enum class EnumerationMode { Exhaustive, Closure };
std::string_view to_string(EnumerationMode m);

struct IdealEnumerationOptions {
  std::size_t max_order = 0;         // 0: WBK_MAX_ORDER or 24
  std::size_t exhaustive_bound = 16;
  std::optional<EnumerationMode> force;
};

struct IdealEnumeration {
  std::vector<Subset> ideals;  // canonical order
  EnumerationMode mode;
};

/// Default exhaustive-enumeration bound; WBK_MAX_ORDER overrides 24.
std::size_t default_max_order();

IdealEnumeration enumerate_ideals(const DualWeakBrace& s, const IdealEnumerationOptions& options = {});

struct IdealDecomposition {
  Decomposition decomposition;
  /// I_alpha = B_alpha intersected with I, in local indices.
  std::vector<Subset> parts;
  std::vector<bool> part_is_ideal;
  /// phi_{alpha,beta}(I_alpha) subset of I_beta for every alpha > beta.
  bool maps_compatible = true;
};

IdealDecomposition ideal_decomposition(const DualWeakBrace& s, const Subset& i);

}  // namespace wbk
