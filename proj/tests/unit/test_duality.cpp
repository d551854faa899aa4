#include "doctest.h"
#include "oracle.hpp"
#include "stdual/builtins.hpp"
#include "stdual/duality.hpp"
#include "stdual/errors.hpp"

using namespace stdual;

namespace {

const std::vector<LeviFamily> kFamilies{LeviFamily::arthur, LeviFamily::all, LeviFamily::support};

std::vector<std::vector<int>> as_ints(const OperatorMatrix& m) {
  std::vector<std::vector<int>> out;
  for (const auto& row : m.entries) {
    std::vector<int> r;
    for (const auto& x : row) r.push_back(static_cast<int>(x.to_rational().get_num().get_si()));
    out.push_back(r);
  }
  return out;
}

long brute_euler(const Scenario& s, const std::vector<std::size_t>& family, std::size_t k) {
  long sum = 0;
  for (std::size_t l : family)
    if (s.lattice[k].split_component.contains(s.lattice[l].split_component))
      sum += (s.dim_a(k) - s.dim_a(l)) % 2 ? -1 : 1;
  return sum;
}

}  // namespace

TEST_CASE("z2-corank1 golden values") {
  auto s = builtin("z2-corank1");
  DualityEngine e(s);
  const auto& fam = e.top().family;
  REQUIRE(fam.size() == 2);
  auto triv = fam.at(0);
  auto sgn = fam.at(1);
  CHECK(triv == ClassFunction::trivial(e.top().group));

  auto d = e.matrix();
  CHECK(as_ints(d) == std::vector<std::vector<int>>{{0, -1}, {-1, 0}});
  CHECK((d * d).is_identity());

  auto xi = sign_map(s);
  CHECK(e.dual(triv) == xi);
  CHECK(xi == -sgn);
  CHECK(e.steinberg() == e.dual(triv));
  CHECK(is_elliptic_character(s, e.steinberg()));
  CHECK(is_elliptic_character(s, triv));
  CHECK(is_elliptic_character(s, sgn));
  CHECK(euler_check(s, s.levi_index_m()) == 0);
}

TEST_CASE("klein4 golden values") {
  auto s = builtin("klein4");
  DualityEngine e(s);
  CHECK(e.family() == std::vector<std::size_t>{0, 1, 3, 5});
  const auto& fam = e.top().family;
  REQUIRE(fam.size() == 4);

  auto xi = sign_map(s);
  // xi is +1 at 1 and -I, -1 at the two reflections.
  for (std::size_t r = 0; r < 4; ++r) {
    const auto& m = (*s.r_group->linear_action())[r];
    const bool reflection = oracle::fixed_dim(m) == 1;
    CHECK(xi(static_cast<int>(r)) == Cyclotomic(reflection ? -1 : 1));
  }
  const int xi_index = e.top().family.table.index_of(xi);
  REQUIRE(xi_index >= 0);

  // D swaps 1 with xi and the two remaining linear characters with each
  // other, all with coefficient +1.
  auto d = e.matrix();
  CHECK(as_ints(d) == std::vector<std::vector<int>>{{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}});
  CHECK(fam.at(3) == xi);
  CHECK((d * d).is_identity());

  auto st = e.steinberg();
  CHECK(st == xi);
  for (std::size_t l : {std::size_t{1}, std::size_t{3}}) {
    auto sub = e.inclusion(l, e.top_index());
    CHECK(e.project(l, restrict(st, sub)) == e.steinberg(l));
  }
}

TEST_CASE("engine duality matches the brute-force sum") {
  for (const auto& s : builtin_library())
    for (auto f : kFamilies) {
      CAPTURE(s.name());
      CAPTURE(to_string(f));
      DualityEngine e(s, f);
      for (const auto& theta : e.top().family.characters())
        CHECK(oracle::values_of(e.dual(theta)) == oracle::dual(s, e.family(), oracle::values_of(theta)));
      if (s.extension.chi_trivial())
        CHECK(oracle::values_of(e.steinberg()) == oracle::steinberg(s, e.family()));
    }
}

TEST_CASE("euler sums") {
  for (const auto& s : builtin_library())
    for (auto f : kFamilies) {
      auto fam = active_levi_family(s, f);
      for (std::size_t k : fam) CHECK(euler_check(s, k, f) == brute_euler(s, fam, k));
    }
  auto a2 = builtin("a2-full");
  CHECK(euler_check(a2, 0, LeviFamily::all) == -1);
  CHECK_THROWS_AS(euler_check(builtin("klein4"), 2, LeviFamily::support), InvalidInput);
}

TEST_CASE("ellipticity without regular elements") {
  auto s = builtin("trivial-levi");
  DualityEngine e(s);
  CHECK_FALSE(is_elliptic_character(s, ClassFunction::trivial(e.top().group)));
}

TEST_CASE("nonsplit base characters need a designation") {
  auto s = builtin("q8-klein");
  DualityEngine e(s);
  CHECK(e.top().family.size() == 1);
  CHECK_THROWS_AS(e.base(e.top_index()), ConfigurationError);
  CHECK_THROWS_AS(e.steinberg(), ConfigurationError);
  // The two-dimensional character is fixed by D up to sign.
  auto d = e.matrix();
  REQUIRE(d.size() == 1);
  CHECK((d * d).is_identity());
}

TEST_CASE("levels") {
  auto s = builtin("klein4");
  DualityEngine e(s, LeviFamily::all);
  CHECK(e.in_family(2));
  CHECK(e.level(0).group->order() == 1);
  CHECK(e.top().group->order() == 4);
  CHECK(e.inclusion(0, e.top_index()).group->order() == 1);
  CHECK_THROWS(e.inclusion(e.top_index(), 0));
}
