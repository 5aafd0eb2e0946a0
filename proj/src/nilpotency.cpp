#include "wbk/nilpotency.hpp"

#include <algorithm>
#include <string>

namespace wbk {

std::string_view to_string(SeriesKind k) {
  switch (k) {
    case SeriesKind::Right: return "right";
    case SeriesKind::Socle: return "socle";
    case SeriesKind::Annihilator: return "ann";
    case SeriesKind::Gamma: return "gamma";
  }
  return "?";
}

namespace {

template <class Step>
std::vector<Subset> iterate_until_repeat(Subset start, Step&& step) {
  std::vector<Subset> chain{std::move(start)};
  for (;;) {
    Subset next = step(chain.back());
    if (next == chain.back()) return chain;
    chain.push_back(std::move(next));
  }
}

template <class Elementwise, class ByQuotient>
SeriesReport ascending(const DualWeakBrace& s, SeriesKind kind, Elementwise&& step,
                       ByQuotient&& by_quotient) {
  SeriesReport report{kind, iterate_until_repeat(idempotent_set(s), step), false, std::nullopt, true};
  for (const auto& member : report.chain)
    if (step(member) != by_quotient(s, member)) report.quotient_agrees = false;
  report.terminated = report.chain.back() == Subset::full(s.order());
  if (report.terminated) report.index = report.chain.size() - 1;
  return report;
}

// Every b in S satisfies pred(a, b) for a to be kept.
template <class Pred>
Subset elementwise(const DualWeakBrace& s, Pred&& pred) {
  Subset out(s.order());
  for (Element a = 0; a < s.order(); ++a) {
    bool keep = true;
    for (Element b = 0; b < s.order() && keep; ++b) keep = pred(a, b);
    if (keep) out.insert(a);
  }
  return out;
}

}  // namespace

Subset socle_step(const DualWeakBrace& s, const Subset& previous) {
  return elementwise(s, [&](Element a, Element b) {
    return previous.contains(dot(s, a, b)) && previous.contains(add_commutator(s, a, b));
  });
}

Subset annihilator_step(const DualWeakBrace& s, const Subset& previous) {
  return elementwise(s, [&](Element a, Element b) {
    return previous.contains(dot(s, a, b)) && previous.contains(dot(s, b, a)) &&
           previous.contains(add_commutator(s, a, b));
  });
}

Subset socle_step_by_quotient(const DualWeakBrace& s, const Subset& previous) {
  const auto q = quotient(s, previous);
  return pullback(q, socle(q.quotient));
}

Subset annihilator_step_by_quotient(const DualWeakBrace& s, const Subset& previous) {
  const auto q = quotient(s, previous);
  return pullback(q, annihilator(q.quotient));
}

SeriesReport right_series(const DualWeakBrace& s) {
  const Subset all = Subset::full(s.order());
  SeriesReport report{SeriesKind::Right,
                      iterate_until_repeat(all, [&](const Subset& x) { return product_set(s, x, all); }),
                      false, std::nullopt, std::nullopt};
  report.terminated = report.chain.back() == idempotent_set(s);
  if (report.terminated) report.index = std::max<std::size_t>(1, report.chain.size() - 1);
  return report;
}

SeriesReport socle_series(const DualWeakBrace& s) {
  return ascending(s, SeriesKind::Socle, [&](const Subset& x) { return socle_step(s, x); },
                   socle_step_by_quotient);
}

SeriesReport annihilator_series(const DualWeakBrace& s) {
  return ascending(s, SeriesKind::Annihilator, [&](const Subset& x) { return annihilator_step(s, x); },
                   annihilator_step_by_quotient);
}

Subset gamma_step(const DualWeakBrace& s, const Subset& i) {
  Subset seed(s.order());
  for (Element x : i.elements())
    for (Element a = 0; a < s.order(); ++a) {
      seed.insert(dot(s, x, a));
      seed.insert(dot(s, a, x));
      seed.insert(add_commutator(s, x, a));
    }
  return generated_full_inverse_subsemigroup(s, seed);
}

SeriesReport gamma_series(const DualWeakBrace& s, const Subset& i) {
  if (auto r = is_ideal(s, i); !r) fail(ViolationKind::NotAnIdeal, r.witness, r.reason);
  SeriesReport report{SeriesKind::Gamma,
                      iterate_until_repeat(i, [&](const Subset& x) { return gamma_step(s, x); }), false,
                      std::nullopt, std::nullopt};
  report.terminated = report.chain.back() == idempotent_set(s);
  if (report.terminated) report.index = report.chain.size() - 1;
  return report;
}

bool quotient_in_annihilator(const DualWeakBrace& s, const Subset& m, const Subset& n) {
  const auto q = quotient(s, m);
  return project(q, n).is_subset_of(annihilator(q.quotient));
}

bool SandwichReport::holds() const {
  auto all = [](const std::vector<bool>& v) { return std::all_of(v.begin(), v.end(), [](bool b) { return b; }); };
  return all(lower_inclusion) && all(upper_inclusion) && lemma_mn && lemma_gamma_sum;
}

SandwichReport verify_sandwich(const DualWeakBrace& s, const std::vector<Subset>& chain) {
  const Subset e = idempotent_set(s);
  const Subset all = Subset::full(s.order());
  if (chain.empty() || chain.front() != e)
    fail(ViolationKind::NotAnnihilatorSeries, {0}, "series must start at E(S)");
  if (chain.back() != all)
    fail(ViolationKind::NotAnnihilatorSeries, {static_cast<Element>(chain.size() - 1)},
         "series must end at S");
  for (Element j = 0; j < chain.size(); ++j) {
    if (auto r = is_ideal(s, chain[j]); !r)
      fail(ViolationKind::NotAnnihilatorSeries, {j}, "member is not an ideal: " + r.reason);
    if (j > 0 && !chain[j - 1].is_subset_of(chain[j]))
      fail(ViolationKind::NotAnnihilatorSeries, {j}, "series is not ascending");
  }
  for (Element j = 0; j + 1 < chain.size(); ++j) {
    const auto q = quotient(s, chain[j]);
    const Subset ann = annihilator(q.quotient);
    for (Element x : chain[j + 1].elements())
      if (!ann.contains(q.projection[x]))
        fail(ViolationKind::NotAnnihilatorSeries, {j, x}, "I_{j+1}/I_j is not inside Ann(S/I_j)");
  }

  const std::size_t k = chain.size() - 1;
  std::vector<Subset> gamma{all};
  std::vector<Subset> ann{e};
  for (std::size_t i = 1; i <= k; ++i) {
    gamma.push_back(gamma_step(s, gamma.back()));
    ann.push_back(annihilator_step(s, ann.back()));
  }

  SandwichReport report;
  for (std::size_t j = 0; j <= k; ++j) {
    report.lower_inclusion.push_back(gamma[k - j].is_subset_of(chain[j]));
    report.upper_inclusion.push_back(chain[j].is_subset_of(ann[j]));
  }
  for (std::size_t j = 0; j < k; ++j) {
    const bool lhs = quotient_in_annihilator(s, chain[j], chain[j + 1]);
    const bool rhs = gamma_step(s, chain[j + 1]).is_subset_of(chain[j]);
    if (lhs != rhs) report.lemma_mn = false;
  }
  for (std::size_t a = 0; a <= k; ++a)
    for (std::size_t b = 0; b <= k; ++b) {
      const Subset lhs = gamma_step(s, sum_set(s, chain[a], chain[b]));
      const Subset rhs = sum_set(s, gamma_step(s, chain[a]), gamma_step(s, chain[b]));
      if (lhs != rhs) report.lemma_gamma_sum = false;
    }
  return report;
}

bool ClassifyReport::consistent() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
}

namespace {

NilpotencyIndices indices_of(const DualWeakBrace& s) {
  return {right_series(s).index, socle_series(s).index, annihilator_series(s).index};
}

// Member k of an ascending chain, repeating the fixed point past its end.
const Subset& member(const std::vector<Subset>& chain, std::size_t k) {
  return chain[std::min(k, chain.size() - 1)];
}

}  // namespace

ClassifyReport classify(const DualWeakBrace& s) {
  ClassifyReport report;
  report.whole = indices_of(s);
  const auto d = decompose(s);
  std::vector<DualWeakBrace> parts;
  for (const auto& b : d.spec.braces) {
    parts.push_back(as_dual_weak_brace(b));
    report.components.push_back(indices_of(parts.back()));
  }
  auto check = [&](std::string what, bool ok) { report.checks.emplace_back(std::move(what), ok); };

  auto right_bound = [&](const NilpotencyIndices& x, const std::string& who) {
    // The right index is positive by definition, so a socle index of 0
    // (S = E(S)) still bounds it by 1.
    if (x.socle)
      check(who + ": left annihilator nilpotent implies right nilpotent with index <= max(1, m)",
            x.right && *x.right <= std::max<std::size_t>(1, *x.socle));
  };
  right_bound(report.whole, "S");
  for (std::size_t a = 0; a < parts.size(); ++a) right_bound(report.components[a], "B_" + std::to_string(a));

  auto component_law = [&](auto field, const std::string& name) {
    const auto whole = report.whole.*field;
    bool all_terminate = true;
    std::size_t max_index = 0;
    for (const auto& c : report.components) {
      const auto v = c.*field;
      if (!v) all_terminate = false;
      else max_index = std::max(max_index, *v);
    }
    if (all_terminate) check(name + ": index of S equals the maximum over components", whole && *whole == max_index);
    if (whole) {
      bool ok = true;
      for (const auto& c : report.components) ok = ok && (c.*field) && *(c.*field) <= *whole;
      check(name + ": every component terminates with index <= that of S", ok);
    }
  };
  component_law(&NilpotencyIndices::socle, "socle");
  component_law(&NilpotencyIndices::annihilator, "ann");

  const auto soc_s = socle_series(s).chain;
  bool sock = true;
  for (std::size_t a = 0; a < parts.size(); ++a) {
    const auto soc_b = socle_series(parts[a]).chain;
    const std::size_t depth = std::max(soc_s.size(), soc_b.size());
    for (std::size_t k = 0; k < depth; ++k)
      for (Element x : d.members[a])
        if (member(soc_s, k).contains(x) && !member(soc_b, k).contains(d.location[x].second)) sock = false;
  }
  check("B_alpha intersected with Soc_k(S) lies in Soc_k(B_alpha)", sock);

  const auto q = quotient(s, socle(s));
  if (right_series(q.quotient).terminated)
    check("S/Soc(S) right nilpotent implies S right nilpotent", report.whole.right.has_value());
  return report;
}

}  // namespace wbk
