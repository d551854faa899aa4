#include <set>

#include "doctest.h"
#include "oracle.hpp"
#include "stdual/builtins.hpp"
#include "stdual/errors.hpp"
#include "stdual/rgroup.hpp"
#include "stdual/scenario_io.hpp"

using namespace stdual;

namespace {

bool has_code(const ValidationResult& v, const std::string& code) {
  for (const auto& x : v.violations)
    if (x.code == code) return true;
  return false;
}

ScenarioDocument doc_of(const std::string& name) { return parse_scenario_document(builtin_document(name)); }

}  // namespace

TEST_CASE("levi families") {
  CHECK(parse_levi_family("support") == LeviFamily::support);
  CHECK(to_string(LeviFamily::all) == "all");
  CHECK_THROWS_AS(parse_levi_family("every"), InvalidInput);
}

TEST_CASE("z2-corank1 geometry") {
  auto s = builtin("z2-corank1");
  CHECK(s.lattice.size() == 2);
  CHECK(s.dim_a(0) == 1);
  CHECK(s.dim_a(s.levi_g()) == 0);
  CHECK(s.r_group->order() == 2);

  auto reg = regular_set(s);
  CHECK(reg.elliptic);
  REQUIRE(reg.elements.size() == 1);
  CHECK(reg.elements[0] != s.r_group->identity());

  auto strata = levi_support_partition(s);
  REQUIRE(strata.size() == 2);
  CHECK(strata[0].levi == 0);
  CHECK(strata[1].levi == 1);
}

TEST_CASE("klein4 geometry") {
  auto s = builtin("klein4");
  CHECK(s.lattice.size() == 6);
  CHECK(s.r_group->order() == 4);
  CHECK(s.non_reflection_elements);

  auto strata = levi_support_partition(s);
  CHECK(strata.size() == 4);
  std::set<std::size_t> levis;
  for (const auto& st : strata) {
    CHECK(st.elements.size() == 1);
    levis.insert(st.levi);
  }
  auto support = active_levi_family(s, LeviFamily::support);
  CHECK(std::vector<std::size_t>(levis.begin(), levis.end()) == support);
  CHECK(support.size() == 4);
  CHECK(active_levi_family(s, LeviFamily::all).size() == 6);
  CHECK(active_levi_family(s, LeviFamily::arthur).size() == 6);

  // Exactly -I is regular.
  auto reg = regular_set(s);
  REQUIRE(reg.elements.size() == 1);
  CHECK((*s.r_group->linear_action())[static_cast<std::size_t>(reg.elements[0])] ==
        Matrix::from_rows({{-1, 0}, {0, -1}}, 2));

  CHECK_THROWS_AS(subgroup_for_levi(s, 2, LeviFamily::support), InvalidInput);
  CHECK(subgroup_for_levi(s, s.levi_g()).r_elements.size() == 4);
  CHECK(subgroup_for_levi(s, 0).r_elements.size() == 1);
}

TEST_CASE("sign map agrees with fixed-space ranks") {
  for (const auto& s : builtin_library()) {
    CAPTURE(s.name());
    CHECK(oracle::values_of(sign_map(s)) == oracle::sign_values(s));
  }
}

TEST_CASE("pointwise stabilizers agree with the action matrices") {
  for (const auto& s : builtin_library()) {
    CAPTURE(s.name());
    for (std::size_t l = 0; l < s.lattice.size(); ++l) CHECK(pointwise_stabilizer(s, l) == oracle::stabilizer(s, l));
    CHECK(pointwise_stabilizer(s, s.levi_g()).size() == s.r_group->order());
  }
}

TEST_CASE("L_r is the Levi of the fixed space") {
  for (const auto& s : builtin_library()) {
    CAPTURE(s.name());
    for (std::size_t r = 0; r < s.r_group->order(); ++r) {
      const auto idx = levi_index_of(s, static_cast<int>(r));
      CHECK(idx == s.levi_of_element[r]);
      CHECK(s.dim_a(idx) == oracle::fixed_dim((*s.r_group->linear_action())[r]));
    }
  }
}

TEST_CASE("regular sets") {
  auto z4 = builtin("z4-rot");
  CHECK(z4.r_group->order() == 4);
  CHECK(regular_set(z4).elements.size() == 3);

  auto tl = builtin("trivial-levi");
  CHECK_FALSE(regular_set(tl).elliptic);
  CHECK(regular_set(tl).elements.empty());

  auto tg = builtin("trivial-g");
  CHECK(tg.lattice.size() == 1);
  CHECK(regular_set(tg).elliptic);
}

TEST_CASE("b2-delta restricts the Arthur family") {
  auto s = builtin("b2-delta");
  CHECK(s.delta_sigma.size() == 2);
  auto arthur = active_levi_family(s, LeviFamily::arthur);
  CHECK(arthur.size() == 5);
  for (std::size_t l = 0; l < s.lattice.size(); ++l) {
    const bool in = std::find(arthur.begin(), arthur.end(), l) != arthur.end();
    CHECK(in == arthur_compatible(s.root_system, s.levi_m, s.delta_sigma, s.lattice[l]));
  }
}

TEST_CASE("every builtin validates") {
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    auto v = validate_scenario(doc_of(name));
    CHECK(v.ok());
    CHECK(v.scenario.has_value());
  }
}

TEST_CASE("wrong-size generator") {
  auto doc = doc_of("klein4");
  doc.generators = {GeneratorSpec{std::nullopt, Matrix::from_rows({{-1}}, 1)}};
  auto v = validate_scenario(doc);
  CHECK_FALSE(v.ok());
  CHECK(has_code(v, "r-group"));
  CHECK_THROWS_AS(build_scenario(doc), ScenarioInconsistency);
}

TEST_CASE("generator moving a_G") {
  auto doc = doc_of("a2-full");
  doc.generators = {GeneratorSpec{std::nullopt, Matrix::from_rows({{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}}, 3)}};
  auto v = validate_scenario(doc);
  REQUIRE(has_code(v, "r-action"));
  for (const auto& x : v.violations)
    if (x.code == "r-action") CHECK_FALSE(x.witness.empty());
}

TEST_CASE("generator not preserving delta_sigma") {
  auto doc = doc_of("b2-delta");
  doc.generators = {GeneratorSpec{std::vector<int>{1}, Matrix{}}};
  auto v = validate_scenario(doc);
  REQUIRE(has_code(v, "delta-stability"));
  try {
    build_scenario(doc);
    FAIL("expected an inconsistency");
  } catch (const ScenarioInconsistency& e) {
    CHECK(std::string(e.what()).find("delta-stability") != std::string::npos);
  }
}

TEST_CASE("out-of-range indices") {
  auto doc = doc_of("klein4");
  doc.levi_subset = {3};
  CHECK(has_code(validate_scenario(doc), "levi-subset"));

  doc = doc_of("klein4");
  doc.delta_sigma = {8};
  CHECK(has_code(validate_scenario(doc), "delta-sigma"));

  doc = doc_of("klein4");
  doc.generators = {GeneratorSpec{std::vector<int>{3}, Matrix{}}};
  CHECK(has_code(validate_scenario(doc), "r-group"));

  doc = doc_of("klein4");
  doc.base_characters = {BaseCharacter{0, 5}};
  CHECK(has_code(validate_scenario(doc), "base-characters"));
}

TEST_CASE("extension data errors") {
  auto doc = doc_of("q8-klein");
  doc.extension.chi = {0};
  CHECK(has_code(validate_scenario(doc), "extension"));

  doc = doc_of("q8-klein");
  doc.extension.chi = {0, Rational(1, 3)};  // not a character of Z/2
  CHECK(has_code(validate_scenario(doc), "extension"));

  doc = doc_of("q8-klein");
  doc.extension.center = {{}};
  CHECK(has_code(validate_scenario(doc), "extension"));
}
