#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "wbk/skew_brace.hpp"

namespace wbk {

/// Ordered pair (alpha, beta) of semilattice indices with alpha > beta.
using ComponentPair = std::pair<Element, Element>;

/// [Y; B_alpha; phi_{alpha,beta}]. Identity maps phi_{alpha,alpha} are
/// implicit and never stored.
struct StrongSemilatticeSpec {
  SemilatticeTable y;
  std::vector<SkewBrace> braces;
  std::map<ComponentPair, ElementMap> homs;

  /// phi_{alpha,beta}(a); the identity when alpha == beta.
  Element connect(Element alpha, Element beta, Element a) const;

  friend bool operator==(const StrongSemilatticeSpec&, const StrongSemilatticeSpec&) = default;
};

/// Checks that every comparable pair carries a skew brace homomorphism and
/// that the maps compose along every chain alpha > beta > gamma. Throws
/// NotAHom / MissingHom / CompositionViolation with the smallest witness.
void validate_spec(const StrongSemilatticeSpec& spec);

/// Global index of local element `a` of component `alpha`: components are
/// laid out in semilattice order, each in local order.
std::vector<Element> component_offsets(const StrongSemilatticeSpec& spec);

DualWeakBrace compose(const StrongSemilatticeSpec& spec);

/// A dual weak brace split into its strong semilattice of skew braces.
/// `location[x]` gives (component, local index) of each global element and
/// `members[alpha]` lists the global elements of B_alpha in ascending order.
struct Decomposition {
  StrongSemilatticeSpec spec;
  std::vector<std::pair<Element, Element>> location;
  std::vector<std::vector<Element>> members;
};

Decomposition decompose(const DualWeakBrace& s);

/// Maps preserving both operations, in lexicographic order.
std::vector<ElementMap> enumerate_skew_brace_homs(const SkewBrace& a, const SkewBrace& b);

bool is_skew_brace_hom(const SkewBrace& a, const SkewBrace& b, const ElementMap& f);

/// eta: Y -> Z and per-component skew brace isomorphisms
/// theta_alpha: B_alpha -> C_{eta(alpha)} in local indices.
struct IsomorphismWitness {
  std::vector<Element> eta;
  std::vector<ElementMap> thetas;
};

/// Flattens a witness into a global bijection S -> T.
ElementMap global_map(const Decomposition& s, const Decomposition& t, const IsomorphismWitness& w);

std::optional<IsomorphismWitness> are_isomorphic(const DualWeakBrace& s, const DualWeakBrace& t);

}  // namespace wbk
