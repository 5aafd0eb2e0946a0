#include "doctest.h"
#include "oracle.hpp"

using namespace wbk;

namespace {

ViolationKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const ViolationError& e) {
    return e.kind();
  }
  FAIL("no violation raised");
  return ViolationKind::UsageError;
}

Violation violation_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const ViolationError& e) {
    return e.violation();
  }
  FAIL("no violation raised");
  return {};
}

}  // namespace

TEST_CASE("validate_group on small tables") {
  const auto c2 = validate_group(RawTable{{0, 1}, {1, 0}});
  CHECK(c2.order() == 2);
  CHECK(c2.identity() == 0);

  const auto c3 = validate_group(RawTable{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  CHECK(c3.inverse(1) == 2);

  // op(0,0)=1, xor elsewhere: (0*0)*1 = 0 but 0*(0*1) = 0*1 = 1.
  const auto k = kind_of([] { validate_group(RawTable{{1, 1}, {1, 0}}); });
  CHECK((k == ViolationKind::NotAssociative || k == ViolationKind::NoIdentity));
}

TEST_CASE("validate_group reports malformed tables") {
  CHECK(kind_of([] { validate_group(RawTable{{0, 1}, {1}}); }) == ViolationKind::NotClosed);
  CHECK(kind_of([] { validate_group(RawTable{{0, 2}, {1, 0}}); }) == ViolationKind::NotClosed);
  // Associative, no identity: constant map.
  CHECK(kind_of([] { validate_group(RawTable{{0, 0}, {0, 0}}); }) == ViolationKind::NoIdentity);
  // The {0,1} semilattice with top 0 is a monoid without inverses.
  CHECK(kind_of([] { validate_group(RawTable{{0, 1}, {1, 1}}); }) == ViolationKind::NoInverse);
}

TEST_CASE("validate_clifford") {
  const auto g = as_clifford(oracle::group("sym3"));
  CHECK(g.idempotents() == std::vector<Element>{0});

  const auto y = as_clifford(std::get<SemilatticeTable>(load("y_v3")));
  CHECK(y.idempotents() == std::vector<Element>{0, 1, 2});

  // Left-zero semigroup: every x satisfies axa = a, so inverses are not unique.
  const auto k = kind_of([] { validate_clifford(RawTable{{0, 0}, {1, 1}}); });
  CHECK((k == ViolationKind::NotInverse || k == ViolationKind::NotClifford));

  // Inverse but not Clifford: the 2x2 matrix units with zero, B2.
  // Indices: 0 zero, 1 e11, 2 e12, 3 e21, 4 e22; eij*ekl = eil if j == k.
  RawTable b2(5, std::vector<std::int64_t>(5, 0));
  const int i_of[5] = {0, 1, 1, 2, 2}, j_of[5] = {0, 1, 2, 1, 2};
  for (int a = 1; a < 5; ++a)
    for (int b = 1; b < 5; ++b)
      if (j_of[a] == i_of[b])
        for (int c = 1; c < 5; ++c)
          if (i_of[c] == i_of[a] && j_of[c] == j_of[b]) b2[a][b] = c;
  const auto v = violation_of([&] { validate_clifford(b2); });
  CHECK(v.kind == ViolationKind::NotClifford);
  CHECK(v.witness == std::vector<Element>{2});
}

TEST_CASE("validate_semilattice") {
  CHECK(validate_semilattice(RawTable{{0}}).size() == 1);
  const auto chain = validate_semilattice(RawTable{{0, 1}, {1, 1}});
  CHECK(chain.geq(0, 1));
  CHECK_FALSE(chain.geq(1, 0));

  const auto v = violation_of([] { validate_semilattice(RawTable{{0, 0}, {1, 1}}); });
  CHECK(v.kind == ViolationKind::NotCommutative);
  CHECK(v.witness == std::vector<Element>{0, 1});
  CHECK(kind_of([] { validate_semilattice(RawTable{{1, 1}, {1, 1}}); }) == ViolationKind::NotIdempotent);
}

TEST_CASE("group axioms hold on every catalog group") {
  for (const auto& name : oracle::names_of_kind("group")) {
    CAPTURE(name);
    const auto g = oracle::group(name);
    for (Element x = 0; x < g.order(); ++x) {
      CHECK(g.op(g.identity(), x) == x);
      CHECK(g.op(x, g.identity()) == x);
      CHECK(g.op(x, g.inverse(x)) == g.identity());
    }
  }
}

TEST_CASE("idempotents of Clifford tables are closed and central") {
  for (const auto& [name, s] : oracle::catalog_structures()) {
    CAPTURE(name);
    for (const auto* c : {&s.additive(), &s.multiplicative()}) {
      for (Element e : c->idempotents())
        for (Element x = 0; x < c->order(); ++x) {
          CHECK(c->op(e, x) == c->op(x, e));
          if (c->is_idempotent(x)) CHECK(c->is_idempotent(c->op(e, x)));
        }
    }
  }
}

TEST_CASE("generating_set") {
  CHECK(generating_set(oracle::group("c3")) == std::vector<Element>{1});
  CHECK(generating_set(oracle::group("klein4")) == std::vector<Element>{1, 2});
  CHECK(generating_set(oracle::group("c1")).empty());
  for (const auto& name : oracle::names_of_kind("group")) {
    const auto g = oracle::group(name);
    const auto gens = generating_set(g);
    CHECK(subgroup_closure(g, gens).size() == g.order());
  }
}

TEST_CASE("catalog Sym3 agrees with permutation products") {
  CHECK(oracle::group("sym3").table().to_raw() == oracle::sym3_from_permutations());
}

TEST_CASE("enumerate_group_homs examples") {
  CHECK(enumerate_group_homs(oracle::group("c2"), oracle::group("c2")).size() == 2);
  const auto homs = enumerate_group_homs(oracle::group("c3"), oracle::group("sym3"));
  CHECK(homs == std::vector<ElementMap>{{0, 0, 0}, {0, 4, 5}, {0, 5, 4}});
  CHECK(enumerate_group_homs(oracle::group("c2"), oracle::group("c3")) == std::vector<ElementMap>{{0, 0}});
}

TEST_CASE("enumerate_group_homs agrees with brute force up to order 4") {
  std::vector<std::string> small;
  for (const auto& name : oracle::names_of_kind("group"))
    if (oracle::group(name).order() <= 4) small.push_back(name);
  for (const auto& a : small)
    for (const auto& b : small) {
      CAPTURE(a);
      CAPTURE(b);
      CHECK(enumerate_group_homs(oracle::group(a), oracle::group(b)) ==
            oracle::brute_group_homs(oracle::group(a), oracle::group(b)));
    }
  // Larger pairs, still brute-forceable.
  CHECK(enumerate_group_homs(oracle::group("sym3"), oracle::group("c6")) ==
        oracle::brute_group_homs(oracle::group("sym3"), oracle::group("c6")));
  CHECK(enumerate_group_homs(oracle::group("c6"), oracle::group("sym3")) ==
        oracle::brute_group_homs(oracle::group("c6"), oracle::group("sym3")));
}

TEST_CASE("hom_witness finds the smallest failing pair") {
  const auto c3 = oracle::group("c3");
  const auto s3 = oracle::group("sym3");
  // f(1+1) = f(2) = (12) but f(1)f(1) = (12)(12) = id.
  const auto w = hom_witness(c3.table(), s3.table(), ElementMap{0, 1, 1});
  REQUIRE(w.has_value());
  CHECK(*w == std::pair<Element, Element>{1, 1});
}

TEST_CASE("element orders and exponent") {
  const auto s3 = oracle::group("sym3");
  CHECK(element_order(s3, 0) == 1);
  CHECK(element_order(s3, 1) == 2);
  CHECK(element_order(s3, 4) == 3);
  CHECK(exponent(s3) == 6);
  CHECK(exponent(oracle::group("klein4")) == 2);
}
