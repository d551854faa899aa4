#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "stdual/builtins.hpp"
#include "stdual/errors.hpp"
#include "stdual/extension.hpp"
#include "stdual/scenario_io.hpp"

using namespace stdual;

namespace {

const char* kZ4OverZ2 = R"(name: z4-cover
description: cyclic cover of the corank-one group
root_system: {ambient_dim: 1, roots: [[1], [-1]], simple_roots: [1]}
levi_subset: []
delta_sigma: []
r_group:
  generators:
    - matrix: [[-1]]
extension:
  mult_table:
    - [0, 1, 2, 3]
    - [1, 2, 3, 0]
    - [2, 3, 0, 1]
    - [3, 0, 1, 2]
  center: [0, 2]
  chi: [0, 1/2]
  lifts: [1]
)";

std::string replace(std::string s, const std::string& from, const std::string& to) {
  auto pos = s.find(from);
  REQUIRE(pos != std::string::npos);
  return s.replace(pos, from.size(), to);
}

}  // namespace

TEST_CASE("emit then parse is the identity on every builtin") {
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    auto doc = parse_scenario_document(builtin_document(name));
    auto text = emit_scenario(doc);
    auto again = parse_scenario_document(text);
    CHECK(again == doc);
    CHECK(emit_scenario(again) == text);
  }
}

TEST_CASE("builtin z2-corank1 parses to |R| = 2") {
  auto s = parse_scenario(builtin_document("z2-corank1"));
  CHECK(s.r_group->order() == 2);
  CHECK(s.extension.is_split());
  CHECK(s.root_system.rank() == 1);
}

TEST_CASE("mult_table extensions") {
  auto s = parse_scenario(kZ4OverZ2);
  CHECK(s.extension.total->order() == 4);
  CHECK(s.extension.quotient->order() == 2);
  CHECK(chi_isotypic(s.extension).size() == 2);
  auto doc = parse_scenario_document(kZ4OverZ2);
  CHECK(parse_scenario_document(emit_scenario(doc)) == doc);
}

TEST_CASE("non-square mult_table is a syntax error with its location") {
  auto text = replace(kZ4OverZ2, "    - [3, 0, 1, 2]", "    - [3, 0, 1]");
  try {
    parse_scenario_document(text, "bad.yaml");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 14);
    CHECK(std::string(e.what()).rfind("bad.yaml:14:", 0) == 0);
  }
}

TEST_CASE("chi that is not a homomorphism is a validation error") {
  auto text = replace(kZ4OverZ2, "chi: [0, 1/2]", "chi: [0, 1/3]");
  CHECK_NOTHROW(parse_scenario_document(text));
  CHECK_THROWS_AS(parse_scenario(text), ScenarioInconsistency);
}

TEST_CASE("schema errors") {
  const std::string base = builtin_document("z2-corank1");
  auto unknown = replace(base, "levi_subset: []", "levi_subset: []\nflavour: strange");
  try {
    parse_scenario_document(unknown);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 5);
    CHECK(std::string(e.what()).find("flavour") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_scenario_document(replace(base, "[[-1]]", "[[x]]")), ParseError);
  CHECK_THROWS_AS(parse_scenario_document(replace(base, "[[-1]]", "[[-1, 0]]")), ParseError);
  CHECK_THROWS_AS(parse_scenario_document("name: [unclosed"), ParseError);
  CHECK_THROWS_AS(parse_scenario_document(replace(base, "levi_family: arthur", "levi_family: most")), ParseError);
  CHECK_THROWS_AS(parse_scenario_document(replace(base, "simple_roots: [1]", "simple_roots: [0]")), ParseError);
}

TEST_CASE("rationals are exact") {
  auto doc = parse_scenario_document(replace(builtin_document("z2-corank1"), "[[1], [-1]]", "[[2/4], [-1/2]]"));
  CHECK(doc.root_system.roots[0][0] == Rational(1, 2));
}

TEST_CASE("load from disk") {
  const std::string path = "stdual_io_test.yaml";
  {
    std::ofstream f(path);
    f << builtin_document("klein4");
  }
  auto s = load_scenario(path);
  CHECK(s.name() == "klein4");
  std::remove(path.c_str());
  CHECK_THROWS_AS(load_scenario("does/not/exist.yaml"), InvalidInput);
}

TEST_CASE("unknown builtin") { CHECK_THROWS_AS(builtin("nope"), InvalidInput); }
