#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "oracle.hpp"

using namespace wbk;

namespace {

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("wbk_test_" + name);
  std::ofstream(path, std::ios::binary) << text;
  return path;
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

TEST_CASE("catalog contents") {
  const auto names = catalog_list();
  for (const auto* required : {"c2", "c3", "c4", "c6", "sym3", "klein4", "trivial_c2", "trivial_c3", "trivial_c4",
                               "trivial_c6", "trivial_sym3", "trivial_klein4", "z6_exotic", "c3_sym3",
                               "c2_c4_braces", "sl2_trivial", "sl3_trivial"}) {
    CAPTURE(required);
    CHECK(std::find(names.begin(), names.end(), required) != names.end());
  }
  CHECK(catalog_convention().find("applies q first") != std::string::npos);
  for (const auto& e : catalog()) CHECK_FALSE(e.provenance.empty());
}

TEST_CASE("load resolves catalog names") {
  const auto spec = std::get<StrongSemilatticeSpec>(load("catalog:c3_sym3"));
  CHECK(spec.homs.at({0, 1}) == ElementMap{0, 4, 5});
  CHECK(spec.braces[0] == oracle::brace("trivial_c3"));
  CHECK(spec.braces[1] == oracle::brace("trivial_sym3"));

  const auto z6 = std::get<SkewBrace>(load("catalog:z6_exotic"));
  for (Element a = 0; a < 6; ++a)
    for (Element b = 0; b < 6; ++b) CHECK(z6.circ(a, b) == ((a + (a % 2 ? 6 - b : b)) % 6));

  CHECK(load("z6_exotic") == load("catalog:z6_exotic"));
  CHECK(violation_of([] { load("catalog:nope"); }).kind == ViolationKind::UnknownName);
  CHECK(violation_of([] { load("/nonexistent/file.json"); }).kind == ViolationKind::UnknownName);
}

TEST_CASE("every catalog entry round-trips") {
  for (const auto& e : catalog()) {
    CAPTURE(e.name);
    const auto text = serialize(e.payload);
    CHECK(parse_structure(text) == e.payload);
    CHECK(serialize(parse_structure(text)) == text);
    const auto path = write_temp(e.name + ".json", text);
    CHECK(serialize(load(path.string())) == text);
    std::filesystem::remove(path);
  }
}

TEST_CASE("non-canonical files serialize canonically") {
  const std::string loose = R"({ "op": [[0,1,2],[1,2,0],[2,0,1]],
      "order": 3,   "kind": "group" })";
  CHECK(serialize(parse_structure(loose)) == serialize(load("c3")));

  const std::string spec = R"({"kind":"strong_semilattice",
    "semilattice":{"kind":"semilattice","size":2,"meet":[[0,1],[1,1]]},
    "braces":{"1":{"kind":"skew_brace","order":4,"add":[[0,1,2,3],[1,2,3,0],[2,3,0,1],[3,0,1,2]],
                   "mul":[[0,1,2,3],[1,2,3,0],[2,3,0,1],[3,0,1,2]]},
              "0":{"kind":"skew_brace","order":2,"add":[[0,1],[1,0]],"mul":[[0,1],[1,0]]}},
    "homs":{"0>1":[0,2]}})";
  CHECK(serialize(parse_structure(spec)) == serialize(load("c2_c4_braces")));
}

TEST_CASE("parse errors") {
  const auto full = serialize(load("c3_sym3"));
  const auto truncated = full.substr(0, full.size() / 2);
  const auto v = violation_of([&] { parse_structure(truncated); });
  CHECK(v.kind == ViolationKind::ParseError);
  CHECK(v.context.find("byte ") == 0);

  const auto path = write_temp("truncated.json", truncated);
  CHECK(violation_of([&] { load(path.string()); }).kind == ViolationKind::ParseError);
  std::filesystem::remove(path);

  CHECK(violation_of([] { parse_structure(R"({"order":2})"); }).kind == ViolationKind::ParseError);
  CHECK(violation_of([] { parse_structure(R"({"kind":"ring","order":1})"); }).kind == ViolationKind::ParseError);
  CHECK(violation_of([] { parse_structure(R"({"kind":"group","order":2,"op":[[0,1]]})"); }).kind ==
        ViolationKind::ParseError);
  CHECK(violation_of([] { parse_structure(R"({"kind":"group","order":2,"op":"x"})"); }).kind ==
        ViolationKind::ParseError);
}

TEST_CASE("validation errors are forwarded") {
  CHECK(violation_of([] { parse_structure(R"({"kind":"group","order":2,"op":[[0,0],[0,0]]})"); }).kind ==
        ViolationKind::NoIdentity);
  const auto v = violation_of([] {
    parse_structure(R"({"kind":"strong_semilattice",
      "semilattice":{"kind":"semilattice","size":2,"meet":[[0,1],[1,1]]},
      "braces":{"0":{"kind":"skew_brace","order":2,"add":[[0,1],[1,0]],"mul":[[0,1],[1,0]]},
                "1":{"kind":"skew_brace","order":2,"add":[[0,1],[1,0]],"mul":[[0,1],[1,0]]}},
      "homs":{"0>1":[1,1]}})");
  });
  CHECK(v.kind == ViolationKind::NotAHom);
}

TEST_CASE("solution files") {
  const std::string text = R"({"kind":"solution","map":[[[0,0],[1,0]],[[0,1],[1,1]]],"order":2})";
  const auto r = std::get<SolutionTable>(parse_structure(text));
  CHECK(r(0, 1) == ElementPair{1, 0});
  CHECK(serialize(r) == text);
  CHECK(violation_of([] { parse_structure(R"({"kind":"solution","order":2,"map":[[[0,0]]]})"); }).kind ==
        ViolationKind::ParseError);
}

TEST_CASE("as_dual_weak_brace on each kind") {
  CHECK(as_dual_weak_brace(load("c3")) == oracle::dwb("trivial_c3"));
  CHECK(as_dual_weak_brace(load("y_chain3")) == oracle::dwb("sl3_trivial"));
  CHECK(as_dual_weak_brace(load("c3_sym3")) == compose(oracle::spec("c3_sym3")));
  CHECK(violation_of([] { as_dual_weak_brace(load("flip3")); }).kind == ViolationKind::UsageError);
}

TEST_CASE("parse_subset") {
  CHECK(parse_subset(6, "0,2,4") == Subset(6, {0, 2, 4}));
  CHECK(parse_subset(6, "{4, 0,2}") == Subset(6, {0, 2, 4}));
  CHECK(parse_subset(6, "{}") == Subset(6));
  CHECK(violation_of([] { parse_subset(6, "0,7"); }).kind == ViolationKind::ParseError);
  CHECK(violation_of([] { parse_subset(6, "0,x"); }).kind == ViolationKind::ParseError);
  CHECK(Subset(6, {0, 2, 4}).to_string() == "{0,2,4}");
}
