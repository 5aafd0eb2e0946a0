#include "wbk/algebra.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>

namespace wbk {

namespace {

constexpr Element kUnset = std::numeric_limits<Element>::max();

}  // namespace

std::optional<std::vector<Element>> associativity_witness(const OpTable& t) {
  const auto n = static_cast<Element>(t.size());
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      const Element ab = t(a, b);
      for (Element c = 0; c < n; ++c)
        if (t(ab, c) != t(a, t(b, c))) return std::vector<Element>{a, b, c};
    }
  return std::nullopt;
}

FiniteGroupTable validate_group(const RawTable& raw) { return validate_group(checked_table(raw)); }

FiniteGroupTable validate_group(const OpTable& table) {
  const auto n = static_cast<Element>(table.size());
  if (n == 0) fail(ViolationKind::NotClosed, {}, "empty table");
  if (auto w = associativity_witness(table)) fail(ViolationKind::NotAssociative, *w);

  std::optional<Element> identity;
  for (Element e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) ok = table(e, x) == x && table(x, e) == x;
    if (ok) identity = e;
  }
  if (!identity) fail(ViolationKind::NoIdentity);

  FiniteGroupTable g;
  g.op_ = table;
  g.identity_ = *identity;
  g.inverse_.assign(n, kUnset);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b)
      if (table(a, b) == *identity && table(b, a) == *identity) {
        g.inverse_[a] = b;
        break;
      }
    if (g.inverse_[a] == kUnset) fail(ViolationKind::NoInverse, {a});
  }
  return g;
}

SemilatticeTable validate_semilattice(const RawTable& raw) {
  return validate_semilattice(checked_table(raw));
}

SemilatticeTable validate_semilattice(const OpTable& table) {
  const auto n = static_cast<Element>(table.size());
  for (Element a = 0; a < n; ++a)
    if (table(a, a) != a) fail(ViolationKind::NotIdempotent, {a});
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (table(a, b) != table(b, a)) fail(ViolationKind::NotCommutative, {a, b});
  if (auto w = associativity_witness(table)) fail(ViolationKind::NotAssociative, *w);
  SemilatticeTable y;
  y.meet_ = table;
  return y;
}

CliffordTable validate_clifford(const RawTable& raw) { return validate_clifford(checked_table(raw)); }

CliffordTable validate_clifford(const OpTable& table) {
  const auto n = static_cast<Element>(table.size());
  if (n == 0) fail(ViolationKind::NotClosed, {}, "empty table");
  if (auto w = associativity_witness(table)) fail(ViolationKind::NotAssociative, *w);

  CliffordTable c;
  c.op_ = table;
  c.inverse_.assign(n, kUnset);
  for (Element a = 0; a < n; ++a) {
    std::size_t found = 0;
    for (Element x = 0; x < n; ++x) {
      if (table(table(a, x), a) == a && table(table(x, a), x) == x) {
        if (found == 0) c.inverse_[a] = x;
        ++found;
      }
    }
    if (found != 1)
      fail(ViolationKind::NotInverse, {a},
           found == 0 ? "no inverse" : "inverse not unique");
  }
  for (Element a = 0; a < n; ++a) {
    const Element ai = c.inverse_[a];
    if (table(a, ai) != table(ai, a)) fail(ViolationKind::NotClifford, {a});
  }
  for (Element a = 0; a < n; ++a)
    if (table(a, a) == a) c.idempotents_.push_back(a);
  return c;
}

CliffordTable as_clifford(const FiniteGroupTable& g) { return validate_clifford(g.table()); }
CliffordTable as_clifford(const SemilatticeTable& y) { return validate_clifford(y.table()); }

std::vector<Element> subgroup_closure(const FiniteGroupTable& g, std::span<const Element> seed) {
  std::vector<bool> in(g.order(), false);
  std::vector<Element> members{g.identity()};
  in[g.identity()] = true;
  for (Element s : seed)
    if (!in[s]) {
      in[s] = true;
      members.push_back(s);
    }
  // Multiplying every member by every seed element reaches the whole subgroup
  // in a finite group since inverses are positive powers.
  for (std::size_t i = 0; i < members.size(); ++i)
    for (Element s : seed) {
      const Element y = g.op(members[i], s);
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
      }
    }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<Element> generating_set(const FiniteGroupTable& g) {
  std::vector<Element> gens;
  std::vector<Element> closure = subgroup_closure(g, gens);
  while (closure.size() < g.order()) {
    Element next = 0;
    while (std::binary_search(closure.begin(), closure.end(), next)) ++next;
    gens.push_back(next);
    closure = subgroup_closure(g, gens);
  }
  return gens;
}

std::optional<std::pair<Element, Element>> hom_witness(const OpTable& from, const OpTable& to,
                                                       const ElementMap& f) {
  const auto n = static_cast<Element>(from.size());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (f[from(x, y)] != to(f[x], f[y])) return std::pair{x, y};
  return std::nullopt;
}

namespace {

// Extends a partial hom along right multiplication by the generators in
// gens[0..count). Returns false on a conflict.
bool extend(const FiniteGroupTable& a, const FiniteGroupTable& b, std::span<const Element> gens,
            ElementMap& f) {
  std::deque<Element> queue;
  for (Element x = 0; x < a.order(); ++x)
    if (f[x] != kUnset) queue.push_back(x);
  while (!queue.empty()) {
    const Element x = queue.front();
    queue.pop_front();
    for (Element g : gens) {
      const Element y = a.op(x, g);
      const Element image = b.op(f[x], f[g]);
      if (f[y] == kUnset) {
        f[y] = image;
        queue.push_back(y);
      } else if (f[y] != image) {
        return false;
      }
    }
  }
  return true;
}

void search(const FiniteGroupTable& a, const FiniteGroupTable& b, const std::vector<Element>& gens,
            std::size_t depth, const ElementMap& partial, std::vector<ElementMap>& out) {
  if (depth == gens.size()) {
    if (!hom_witness(a.table(), b.table(), partial)) out.push_back(partial);
    return;
  }
  const Element g = gens[depth];
  for (Element v = 0; v < b.order(); ++v) {
    if (partial[g] != kUnset && partial[g] != v) continue;
    ElementMap f = partial;
    f[g] = v;
    if (!extend(a, b, std::span(gens).first(depth + 1), f)) continue;
    search(a, b, gens, depth + 1, f, out);
  }
}

}  // namespace

std::vector<ElementMap> enumerate_group_homs(const FiniteGroupTable& a, const FiniteGroupTable& b) {
  const auto gens = generating_set(a);
  ElementMap start(a.order(), kUnset);
  start[a.identity()] = b.identity();
  std::vector<ElementMap> out;
  search(a, b, gens, 0, start, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t element_order(const FiniteGroupTable& g, Element x) {
  std::size_t k = 1;
  for (Element p = x; p != g.identity(); p = g.op(p, x)) ++k;
  return k;
}

std::size_t exponent(const FiniteGroupTable& g) {
  std::size_t e = 1;
  for (Element x = 0; x < g.order(); ++x) e = std::lcm(e, element_order(g, x));
  return e;
}

}  // namespace wbk
