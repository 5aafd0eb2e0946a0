#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wbk/ideals.hpp"

namespace wbk {

enum class SeriesKind { Right, Socle, Annihilator, Gamma };
std::string_view to_string(SeriesKind k);

/// A computed series, stopped at the first repeated member. `terminated`
/// distinguishes reaching the target (E(S) for descending series, S for
/// ascending ones) from stalling at a proper fixed point.
struct SeriesReport {
  SeriesKind kind;
  std::vector<Subset> chain;
  bool terminated = false;
  std::optional<std::size_t> index;
  /// For socle/annihilator series: whether the elementwise computation agrees
  /// with pulling back Soc/Ann of the quotient at every step.
  std::optional<bool> quotient_agrees;
};

/// S^(1) = S, S^(n+1) = S^(n) . S; index is the least m >= 1 with
/// S^(m+1) = E(S).
SeriesReport right_series(const DualWeakBrace& s);

/// Soc_0 = E(S); Soc_n = {a : a.b and [a,b]_+ in Soc_{n-1} for all b}.
SeriesReport socle_series(const DualWeakBrace& s);

/// Ann_0 = E(S); Ann_k = {a : a.b, b.a, [a,b]_+ in Ann_{k-1} for all b}.
SeriesReport annihilator_series(const DualWeakBrace& s);

/// Gamma_0 = I; Gamma_k generated by Gamma_{k-1}.S, S.Gamma_{k-1} and
/// [Gamma_{k-1}, S]_+. Throws NotAnIdeal.
SeriesReport gamma_series(const DualWeakBrace& s, const Subset& i);

/// One step of the Gamma construction.
Subset gamma_step(const DualWeakBrace& s, const Subset& i);

/// Next member of the socle/annihilator series computed through the quotient
/// S / previous (the independent route).
Subset socle_step_by_quotient(const DualWeakBrace& s, const Subset& previous);
Subset annihilator_step_by_quotient(const DualWeakBrace& s, const Subset& previous);

/// Elementwise steps.
Subset socle_step(const DualWeakBrace& s, const Subset& previous);
Subset annihilator_step(const DualWeakBrace& s, const Subset& previous);

struct SandwichReport {
  /// Gamma_{k-j}(S) subset of I_j, per j.
  std::vector<bool> lower_inclusion;
  /// I_j subset of Ann_j(S), per j.
  std::vector<bool> upper_inclusion;
  /// N/M in Ann(S/M) iff Gamma(N) subset of M, on consecutive pairs.
  bool lemma_mn = true;
  /// Gamma(M + N) = Gamma(M) + Gamma(N) on all chain pairs.
  bool lemma_gamma_sum = true;
  bool holds() const;
};

/// Requires an annihilator series E(S) = I_0 <= ... <= I_k = S; throws
/// NotAnnihilatorSeries(j, witness) otherwise.
SandwichReport verify_sandwich(const DualWeakBrace& s, const std::vector<Subset>& chain);

/// N/M subset of Ann(S/M), decided in the quotient.
bool quotient_in_annihilator(const DualWeakBrace& s, const Subset& m, const Subset& n);

struct NilpotencyIndices {
  std::optional<std::size_t> right;
  std::optional<std::size_t> socle;
  std::optional<std::size_t> annihilator;
};

struct ClassifyReport {
  NilpotencyIndices whole;
  std::vector<NilpotencyIndices> components;
  /// Each entry: description and whether it held.
  std::vector<std::pair<std::string, bool>> checks;
  bool consistent() const;
};

ClassifyReport classify(const DualWeakBrace& s);

}  // namespace wbk
