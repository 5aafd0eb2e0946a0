#include "doctest.h"
#include "oracle.hpp"

using namespace wbk;

namespace {

Violation violation_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const ViolationError& e) {
    return e.violation();
  }
  FAIL("no violation raised");
  return {};
}

RawTable cyclic(int n) {
  RawTable t(n, std::vector<std::int64_t>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return t;
}

}  // namespace

TEST_CASE("validate_skew_brace examples") {
  CHECK_NOTHROW(validate_skew_brace(cyclic(3), cyclic(3)));

  RawTable z6_mul(6, std::vector<std::int64_t>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) z6_mul[a][b] = ((a + (a % 2 ? -b : b)) % 6 + 6) % 6;
  const auto z6 = validate_skew_brace(cyclic(6), z6_mul);
  CHECK(z6 == oracle::brace("z6_exotic"));

  const auto v = violation_of([] { validate_skew_brace(RawTable{{0, 1}, {1, 0}}, RawTable{{1, 0}, {0, 1}}); });
  CHECK(v.kind == ViolationKind::IdentityMismatch);
  CHECK(v.witness == std::vector<Element>{0, 1});
}

TEST_CASE("validate_skew_brace wraps group failures") {
  const auto v = violation_of([] { validate_skew_brace(RawTable{{0, 1}, {1, 1}}, cyclic(2)); });
  CHECK(v.kind == ViolationKind::GroupViolation);
  REQUIRE(v.cause.has_value());
  CHECK(*v.cause == ViolationKind::NoInverse);
}

TEST_CASE("compatibility violation carries the smallest triple") {
  // Addition mod 6 against the catalog Sym3 table.
  const RawTable add = cyclic(6);
  const RawTable mul = oracle::sym3_from_permutations();
  std::vector<Element> expected;
  for (Element a = 0; a < 6 && expected.empty(); ++a)
    for (Element b = 0; b < 6 && expected.empty(); ++b)
      for (Element c = 0; c < 6 && expected.empty(); ++c) {
        const auto lhs = mul[a][add[b][c]];
        const auto rhs = add[add[mul[a][b]][(6 - a) % 6]][mul[a][c]];
        if (lhs != rhs) expected = {a, b, c};
      }
  REQUIRE_FALSE(expected.empty());
  const auto v = violation_of([&] { validate_skew_brace(add, mul); });
  CHECK(v.kind == ViolationKind::CompatibilityViolation);
  CHECK(v.witness == expected);
}

TEST_CASE("validate_dual_weak_brace") {
  for (const auto& name : oracle::names_of_kind("skew_brace")) {
    const auto d = as_dual_weak_brace(oracle::brace(name));
    CHECK(d.idempotents() == std::vector<Element>{oracle::brace(name).identity()});
  }
  const auto y = std::get<SemilatticeTable>(load("y_chain3"));
  const auto t = trivial_weak_brace(as_clifford(y));
  CHECK(t.idempotents().size() == 3);

  const auto c = compose(oracle::spec("c3_sym3"));
  CHECK(c.order() == 9);
  CHECK(c.idempotents().size() == 2);
  CHECK_NOTHROW(validate_dual_weak_brace(c.additive().table(), c.multiplicative().table()));

  const auto mismatch = violation_of([] { validate_dual_weak_brace(RawTable{{0, 1}, {1, 1}}, cyclic(2)); });
  CHECK(mismatch.kind == ViolationKind::IdempotentSetMismatch);

  const auto side = violation_of([] { validate_dual_weak_brace(RawTable{{0, 0}, {1, 1}}, cyclic(2)); });
  CHECK(side.kind == ViolationKind::CliffordViolation);
  CHECK(side.cause.has_value());
}

TEST_CASE("lambda, rho, dot and commutator examples") {
  const auto z6 = oracle::dwb("z6_exotic");
  CHECK(lambda(z6, 1, 2) == 4);
  CHECK(dot(z6, 1, 2) == 2);

  const auto s3 = oracle::dwb("trivial_sym3");
  for (Element a = 0; a < 6; ++a)
    for (Element b = 0; b < 6; ++b) {
      CHECK(lambda(s3, a, b) == b);
      CHECK(dot(s3, a, b) == 0);
      CHECK(rho(s3, b, a) == s3.circ(s3.circ(s3.circ_inverse(b), a), b));
    }
  const auto g = oracle::group("sym3");
  const Element x = 1, y = 4;  // (12), (123)
  CHECK(add_commutator(s3, x, y) == g.op(g.op(g.op(g.inverse(x), g.inverse(y)), x), y));

  const auto c3 = oracle::dwb("trivial_c3");
  for (Element a = 0; a < 3; ++a)
    for (Element b = 0; b < 3; ++b) {
      CHECK(rho(c3, b, a) == a);
      CHECK(add_commutator(c3, a, b) == 0);
    }
}

TEST_CASE("idempotent behaviour of lambda, rho and dot") {
  for (const auto& [name, s] : oracle::catalog_structures()) {
    CAPTURE(name);
    for (Element e : s.idempotents()) {
      CHECK(zero_part(s, e) == e);
      for (Element a = 0; a < s.order(); ++a) {
        CHECK(lambda(s, e, a) == s.circ(e, a));
        CHECK(lambda(s, e, a) == s.plus(e, a));
        CHECK(rho(s, e, a) == s.circ(a, e));
        CHECK(s.is_idempotent(dot(s, a, e)));
        CHECK(dot(s, a, e) == dot(s, e, a));
        CHECK(add_commutator(s, e, a) == s.plus(zero_part(s, a), e));
      }
    }
    for (Element a = 0; a < s.order(); ++a) CHECK(zero_part(s, a) == s.circ(a, s.circ_inverse(a)));
  }
}

TEST_CASE("zero parts in the composed example") {
  const auto s = compose(oracle::spec("c3_sym3"));
  for (Element a = 3; a < 9; ++a) CHECK(zero_part(s, a) == 3);
  for (Element a = 0; a < 3; ++a) CHECK(zero_part(s, a) == 0);
}

TEST_CASE("derived maps agree with their definitions") {
  for (const auto& [name, s] : oracle::catalog_structures()) {
    CAPTURE(name);
    for (Element a = 0; a < s.order(); ++a)
      for (Element b = 0; b < s.order(); ++b) {
        CHECK(lambda(s, a, b) == oracle::naive_lambda(s, a, b));
        CHECK(rho(s, b, a) == oracle::naive_rho(s, b, a));
        CHECK(dot(s, a, b) == oracle::naive_dot(s, a, b));
        CHECK(dot(s, a, b) == s.minus(lambda(s, a, b), b));
      }
  }
}

TEST_CASE("lambda is a homomorphism and rho an anti-homomorphism") {
  for (const auto& [name, s] : oracle::catalog_structures()) {
    CAPTURE(name);
    const Element n = static_cast<Element>(s.order());
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c) {
          CHECK(lambda(s, s.circ(a, b), c) == lambda(s, a, lambda(s, b, c)));
          CHECK(rho(s, s.circ(a, b), c) == rho(s, b, rho(s, a, c)));
          CHECK(lambda(s, a, s.plus(b, c)) == s.plus(lambda(s, a, b), lambda(s, a, c)));
        }
  }
}

TEST_CASE("pairwise identities") {
  for (const auto& [name, s] : oracle::catalog_structures()) {
    CAPTURE(name);
    const Element n = static_cast<Element>(s.order());
    for (Element a = 0; a < n; ++a) {
      CHECK(lambda(s, a, s.circ_inverse(a)) == s.neg(a));
      for (Element b = 0; b < n; ++b) {
        CHECK(s.circ(a, b) == s.plus(a, lambda(s, a, b)));
        CHECK(s.plus(a, b) == s.circ(a, lambda(s, s.circ_inverse(a), b)));
        CHECK(s.circ(a, s.neg(b)) == s.plus(s.minus(a, s.circ(a, b)), a));
        CHECK(s.circ(a, b) == s.plus(s.plus(a, dot(s, a, b)), b));

        const Element d = dot(s, a, b);
        const bool idem = s.is_idempotent(d);
        const bool zero_sum = d == s.plus(zero_part(s, a), zero_part(s, b));
        const bool agree = s.plus(a, b) == s.circ(a, b);
        CHECK(idem == zero_sum);
        CHECK(idem == agree);
      }
    }
  }
}

TEST_CASE("dot distributes as expected over triples") {
  for (const auto& [name, s] : oracle::catalog_structures()) {
    CAPTURE(name);
    const Element n = static_cast<Element>(s.order());
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c) {
          CHECK(dot(s, a, s.plus(b, c)) == s.minus(s.plus(s.plus(dot(s, a, b), b), dot(s, a, c)), b));
          CHECK(dot(s, s.circ(a, b), c) == s.plus(s.plus(dot(s, a, dot(s, b, c)), dot(s, b, c)), dot(s, a, c)));
        }
    for (Element e : s.idempotents())
      for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) {
          CHECK(dot(s, a, s.plus(b, e)) == s.plus(dot(s, a, b), dot(s, a, e)));
          CHECK(dot(s, s.plus(e, a), b) == s.plus(dot(s, e, b), dot(s, a, b)));
        }
  }
}

TEST_CASE("opposite") {
  const auto s3 = oracle::dwb("trivial_sym3");
  CHECK(opposite(s3) == oracle::dwb("almost_trivial_sym3"));
  for (const auto& [name, s] : oracle::catalog_structures()) {
    CAPTURE(name);
    CHECK(opposite(opposite(s)) == s);
    if (s.additive().table() == s.additive().table().transposed()) CHECK(opposite(s) == s);
  }
}
