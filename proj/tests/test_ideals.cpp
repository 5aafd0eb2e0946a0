#include "doctest.h"
#include "oracle.hpp"
#include "wbk/ideals.hpp"

using namespace wbk;

namespace {

Subset set(std::size_t n, std::initializer_list<Element> xs) { return Subset(n, xs); }

Subset union_of_component_sets(const DualWeakBrace& s, Subset (*f)(const DualWeakBrace&)) {
  const auto dec = decompose(s);
  Subset out(s.order());
  for (std::size_t a = 0; a < dec.members.size(); ++a) {
    const auto local = f(as_dual_weak_brace(dec.spec.braces[a]));
    for (Element x : local.elements()) out.insert(dec.members[a][x]);
  }
  return out;
}

ElementMap identity_map(std::size_t n) {
  ElementMap f(n);
  std::iota(f.begin(), f.end(), 0);
  return f;
}

// Local indices of an ambient subset inside a substructure.
Subset localize(const Substructure& h, const Subset& x) {
  Subset out(h.embedding.size());
  for (Element i = 0; i < h.embedding.size(); ++i)
    if (x.contains(h.embedding[i])) out.insert(i);
  return out;
}

}  // namespace

TEST_CASE("full additive inverse subsemigroups") {
  const auto z6 = oracle::dwb("z6_exotic");
  CHECK(is_full_inverse_subsemigroup_add(z6, idempotent_set(z6)));
  CHECK(is_full_inverse_subsemigroup_add(z6, Subset::full(6)));
  const auto r = is_full_inverse_subsemigroup_add(z6, set(6, {0, 1}));
  CHECK_FALSE(r);
  CHECK(r.witness == std::vector<Element>{1, 1});
}

TEST_CASE("normal subsemigroups") {
  const auto z6 = oracle::dwb("z6_exotic");
  CHECK(is_normal_subsemigroup(z6, set(6, {0, 2, 4}), Side::Add));
  CHECK(is_normal_subsemigroup(z6, set(6, {0, 2, 4}), Side::Mul));

  const auto s3 = oracle::dwb("trivial_sym3");
  const auto r = is_normal_subsemigroup(s3, set(6, {0, 1}), Side::Mul);
  CHECK_FALSE(r);
  // (13)(12)(13) = (23)
  CHECK(r.witness == std::vector<Element>{2, 1});
  CHECK(s3.circ(s3.circ(2, 1), 2) == 3);
}

TEST_CASE("ideal predicates on examples") {
  const auto z6 = oracle::dwb("z6_exotic");
  CHECK(is_ideal(z6, set(6, {0, 2, 4})));
  CHECK(ideal_tier(z6, set(6, {0, 2, 4})) == IdealTier::Ideal);
  // 1 o 3 o 1 = 5, so {0,3} is not normal in (Z6, o).
  const auto r = is_ideal(z6, set(6, {0, 3}));
  CHECK_FALSE(r);
  CHECK(z6.circ(z6.circ(z6.circ_inverse(1), 3), 1) == 5);

  const auto s = compose(oracle::spec("c3_sym3"));
  const auto f = fix(s);
  CHECK(is_left_ideal(s, f));
  MESSAGE("Fix(c3_sym3) = " << f.to_string() << " tier " << tier_tag(ideal_tier(s, f)));
}

TEST_CASE("socle, fix, left centre and annihilator") {
  const auto z6 = oracle::dwb("z6_exotic");
  CHECK(socle(z6) == set(6, {0, 2, 4}));
  CHECK(annihilator(z6) == set(6, {0}));

  const auto s = compose(oracle::spec("c3_sym3"));
  CHECK(socle(s) == set(9, {0, 3}));
  CHECK(annihilator(s) == set(9, {0, 3}));

  for (const auto& name : {"trivial_c2", "trivial_c4", "trivial_c6", "trivial_klein4"}) {
    const auto b = oracle::dwb(name);
    CHECK(annihilator(b) == Subset::full(b.order()));
  }

  for (const auto& [name, t] : oracle::catalog_structures()) {
    CAPTURE(name);
    CHECK(is_ideal(t, socle(t)));
    CHECK(is_left_ideal(t, fix(t)));
    CHECK(is_strong_left_ideal(t, left_center(t)));
    CHECK(is_ideal(t, annihilator(t)));
    CHECK(annihilator(t) == (socle(t) & multiplicative_center(t)));
    CHECK(left_center(t) == (fix(t) & additive_center(t)));
    if (!is_ideal(t, left_center(t))) MESSAGE(name << ": Zl is not an ideal");
  }
}

TEST_CASE("socle and annihilator against the component union") {
  for (const auto& [name, t] : oracle::catalog_structures()) {
    CAPTURE(name);
    for (auto f : {&socle, &annihilator}) {
      const auto whole = f(t);
      const auto pieces = union_of_component_sets(t, f);
      CHECK(whole.is_subset_of(pieces));
      CHECK((whole == pieces) == is_ideal(t, pieces).holds);
    }
  }
  const auto s = compose(oracle::spec("c3_sym3"));
  CHECK(union_of_component_sets(s, &socle) == set(9, {0, 1, 2, 3}));
}

TEST_CASE("generated full inverse subsemigroups and products") {
  const auto z6 = oracle::dwb("z6_exotic");
  CHECK(generated_full_inverse_subsemigroup(z6, Subset(6)) == set(6, {0}));
  CHECK(generated_full_inverse_subsemigroup(z6, set(6, {1})) == Subset::full(6));
  CHECK(generated_full_inverse_subsemigroup(z6, set(6, {2})) == set(6, {0, 2, 4}));
  CHECK(product_set(z6, Subset::full(6), Subset::full(6)) == set(6, {0, 2, 4}));
}

TEST_CASE("sums of ideals") {
  const auto z6 = oracle::dwb("z6_exotic");
  bool raised = false;
  try {
    sum_of_ideals(z6, set(6, {0, 2, 4}), set(6, {0, 3}));
  } catch (const ViolationError& e) {
    raised = e.kind() == ViolationKind::NotAnIdeal;
  }
  CHECK(raised);
  CHECK(sum_of_ideals(z6, set(6, {0, 2, 4}), set(6, {0})) == set(6, {0, 2, 4}));

  for (const auto& [name, t] : oracle::catalog_structures()) {
    const auto ideals = enumerate_ideals(t).ideals;
    for (const auto& i : ideals)
      for (const auto& j : ideals) {
        const auto sum = sum_of_ideals(t, i, j);
        CHECK(is_ideal(t, sum));
        CHECK(sum == sum_set(t, i, j));
      }
  }
}

TEST_CASE("enumerate_ideals examples") {
  const auto c3 = enumerate_ideals(oracle::dwb("trivial_c3"));
  CHECK(c3.ideals == std::vector<Subset>{set(3, {0}), Subset::full(3)});

  const auto z6 = enumerate_ideals(oracle::dwb("z6_exotic"));
  CHECK(z6.mode == EnumerationMode::Exhaustive);
  CHECK(z6.ideals == std::vector<Subset>{set(6, {0}), set(6, {0, 2, 4}), Subset::full(6)});

  const auto s = compose(oracle::spec("c3_sym3"));
  const auto found = enumerate_ideals(s).ideals;
  CHECK(std::find(found.begin(), found.end(), idempotent_set(s)) != found.end());
  CHECK(std::find(found.begin(), found.end(), Subset::full(9)) != found.end());
  CHECK(std::find(found.begin(), found.end(), set(9, {0, 3, 7, 8})) != found.end());
}

TEST_CASE("enumerate_ideals agrees with the subset-exhaustive oracle") {
  for (const auto& [name, t] : oracle::catalog_structures()) {
    CAPTURE(name);
    const auto expected = oracle::naive_ideals(t);
    CHECK(enumerate_ideals(t, {.force = EnumerationMode::Exhaustive}).ideals == expected);
    CHECK(enumerate_ideals(t, {.force = EnumerationMode::Closure}).ideals == expected);
  }
}

TEST_CASE("enumerate_ideals respects the order bound") {
  const auto s = compose(oracle::spec("c3_sym3"));
  bool raised = false;
  try {
    enumerate_ideals(s, {.max_order = 8});
  } catch (const ViolationError& e) {
    raised = e.kind() == ViolationKind::OrderTooLarge;
  }
  CHECK(raised);
  CHECK(enumerate_ideals(s, {.exhaustive_bound = 4}).mode == EnumerationMode::Closure);
}

TEST_CASE("ideal characterisations over all subsets") {
  for (const auto& [name, t] : oracle::catalog_structures()) {
    if (t.order() > 9) continue;
    CAPTURE(name);
    const auto full = Subset::full(t.order());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << t.order()); ++mask) {
      const auto x = oracle::subset(mask, t.order());
      const bool ideal = is_ideal(t, x).holds;
      CHECK(ideal == oracle::naive_is_ideal(t, x));
      const bool normal = is_normal_subsemigroup(t, x, Side::Add).holds;
      const bool via_products =
          normal && product_set(t, full, x).is_subset_of(x) && product_set(t, x, full).is_subset_of(x);
      CHECK(ideal == via_products);
      if (is_full_inverse_subsemigroup_add(t, x))
        CHECK(is_left_ideal(t, x).holds == product_set(t, full, x).is_subset_of(x));
    }
  }
}

TEST_CASE("products of ideals are left ideals") {
  for (const auto& [name, t] : oracle::catalog_structures()) {
    CAPTURE(name);
    const auto ideals = enumerate_ideals(t).ideals;
    for (const auto& i : ideals)
      for (const auto& j : ideals) {
        const auto ij = product_set(t, i, j);
        const auto ji = product_set(t, j, i);
        CHECK(is_left_ideal(t, ij));
        CHECK(is_left_ideal(t, sum_set(t, ij, ji)));
        CHECK(is_left_ideal(t, commutator_set(t, i, j)));
      }
  }
}

TEST_CASE("quotients") {
  const auto z6 = oracle::dwb("z6_exotic");
  const auto q = quotient(z6, set(6, {0, 2, 4}));
  CHECK(q.quotient == oracle::dwb("trivial_c2"));
  CHECK(q.class_rep == std::vector<Element>{0, 1});
  CHECK(q.projection == ElementMap{0, 1, 0, 1, 0, 1});

  for (const auto& name : oracle::names_of_kind("skew_brace")) {
    const auto b = oracle::dwb(name);
    CHECK(quotient(b, idempotent_set(b)).quotient == b);
  }
  for (const auto& [name, t] : oracle::catalog_structures()) {
    CAPTURE(name);
    const auto whole = quotient(t, Subset::full(t.order()));
    const auto e = restrict_to(t, idempotent_set(t)).structure;
    CHECK(are_isomorphic(whole.quotient, e).has_value());
  }

  bool raised = false;
  try {
    quotient(z6, set(6, {0, 3}));
  } catch (const ViolationError& e) {
    raised = e.kind() == ViolationKind::NotAnIdeal;
  }
  CHECK(raised);
}

TEST_CASE("every ideal gives an idempotent-separating quotient") {
  for (const auto& [name, t] : oracle::catalog_structures()) {
    CAPTURE(name);
    for (const auto& i : enumerate_ideals(t).ideals) {
      const auto q = quotient(t, i);
      CHECK(q.quotient.idempotents().size() == t.idempotents().size());
      CHECK(kernel(t, q.quotient, q.projection) == i);
      CHECK_FALSE(dwb_hom_witness(t, q.quotient, q.projection).has_value());
      for (std::size_t c = 0; c < q.class_rep.size(); ++c) {
        CHECK(q.projection[q.class_rep[c]] == c);
        for (Element x = 0; x < q.class_rep[c]; ++x) CHECK(q.projection[x] != c);
      }
      const auto ind = first_isomorphism_check(t, q.quotient, q.projection);
      CHECK(ind.holds());
      CHECK(ind.induced == identity_map(q.quotient.order()));
    }
  }
}

TEST_CASE("kernels and images") {
  for (const auto& [name, t] : oracle::catalog_structures()) {
    CAPTURE(name);
    CHECK(kernel(t, t, identity_map(t.order())) == idempotent_set(t));
    CHECK(image(t, t, identity_map(t.order())) == Subset::full(t.order()));
  }
  for (const auto& name : oracle::names_of_kind("skew_brace")) {
    const auto b = oracle::dwb(name);
    const ElementMap constant(b.order(), b.idempotents().front());
    CHECK(kernel(b, b, constant) == Subset::full(b.order()));
    const auto rep = first_isomorphism_check(b, b, constant);
    CHECK(rep.holds());
    CHECK(rep.induced.size() == b.idempotents().size());
  }

  const auto c3 = oracle::dwb("trivial_c3");
  const auto s3 = oracle::dwb("trivial_sym3");
  const ElementMap f{0, 4, 5};
  CHECK(kernel(c3, s3, f) == set(3, {0}));
  CHECK(image(c3, s3, f) == set(6, {0, 4, 5}));
  CHECK(is_sub_brace(s3, image(c3, s3, f)));
  CHECK(first_isomorphism_check(c3, s3, f).holds());

  bool raised = false;
  try {
    kernel(c3, s3, ElementMap{0, 1, 1});
  } catch (const ViolationError& e) {
    raised = e.kind() == ViolationKind::NotAHom;
  }
  CHECK(raised);
}

TEST_CASE("sub-brace checks") {
  const auto s = compose(oracle::spec("c3_sym3"));
  // The Sym3 component alone is a sub-brace in the local sense only.
  const auto beta = set(9, {3, 4, 5, 6, 7, 8});
  CHECK(is_sub_brace(s, beta));
  CHECK_FALSE(is_sub_brace(s, beta, true));
  CHECK(is_sub_brace(s, Subset::full(9), true));
  CHECK_FALSE(is_sub_brace(s, set(9, {1})));
}

TEST_CASE("ideal decomposition") {
  const auto s = compose(oracle::spec("c3_sym3"));
  const auto e = ideal_decomposition(s, idempotent_set(s));
  CHECK(e.parts == std::vector<Subset>{set(3, {0}), set(6, {0})});
  const auto whole = ideal_decomposition(s, Subset::full(9));
  CHECK(whole.parts == std::vector<Subset>{Subset::full(3), Subset::full(6)});
  const auto soc = ideal_decomposition(s, socle(s));
  CHECK(soc.parts == std::vector<Subset>{set(3, {0}), set(6, {0})});

  for (const auto& [name, t] : oracle::catalog_structures()) {
    CAPTURE(name);
    for (const auto& i : enumerate_ideals(t).ideals) {
      const auto d = ideal_decomposition(t, i);
      CHECK(d.maps_compatible);
      for (bool ok : d.part_is_ideal) CHECK(ok);
    }
  }
}

TEST_CASE("homomorphism theorems at small orders") {
  for (const auto& [name, t] : oracle::catalog_structures()) {
    if (t.order() > 9) continue;
    CAPTURE(name);
    const auto ideals = enumerate_ideals(t).ideals;

    std::vector<Subset> subs;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << t.order()); ++mask) {
      auto h = oracle::subset(mask, t.order());
      if (is_sub_brace(t, h, true)) subs.push_back(std::move(h));
    }

    for (const auto& i : ideals) {
      const auto qi = quotient(t, i).quotient;
      for (const auto& h : subs) {
        // H / (I and H) against (I + H) / I.
        const auto hs = restrict_to(t, h);
        const auto left = quotient(hs.structure, localize(hs, i & h)).quotient;
        const auto ih = restrict_to(t, sum_set(t, i, h));
        const auto right = quotient(ih.structure, localize(ih, i)).quotient;
        CHECK(are_isomorphic(left, right).has_value());
      }
      for (const auto& j : ideals) {
        if (!j.is_subset_of(i)) continue;
        // (S/J) / (I/J) against S/I.
        const auto qj = quotient(t, j);
        const auto nested = quotient(qj.quotient, project(qj, i)).quotient;
        CHECK(are_isomorphic(nested, qi).has_value());
        CHECK(pullback(qj, project(qj, i)) == i);
      }
    }
  }
}
