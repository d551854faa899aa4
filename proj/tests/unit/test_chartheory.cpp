#include <algorithm>
#include <memory>

#include "doctest.h"
#include "oracle.hpp"
#include "stdual/chartheory.hpp"
#include "stdual/errors.hpp"

using namespace stdual;

namespace {

GroupPtr make(const oracle::Table& t) { return std::make_shared<const FiniteGroup>(FiniteGroup::from_table(t)); }

std::vector<long> degrees(const CharacterTable& ct) {
  std::vector<long> out;
  for (const auto& chi : ct.irreducibles) out.push_back(chi.degree().to_rational().get_num().get_si());
  return out;
}

}  // namespace

TEST_CASE("tables of the builtin groups") {
  for (const auto& ng : oracle::builtin_groups()) {
    CAPTURE(ng.name);
    auto g = make(ng.table);
    auto ct = character_table(g);
    const auto cls = oracle::classes(ng.table);
    REQUIRE(ct.size() == cls.size());
    REQUIRE(g->num_classes() == cls.size());

    long sum = 0;
    for (long d : degrees(ct)) sum += d * d;
    CHECK(sum == static_cast<long>(g->order()));

    // Row orthogonality, element by element.
    for (std::size_t i = 0; i < ct.size(); ++i)
      for (std::size_t j = 0; j < ct.size(); ++j) {
        auto ip = oracle::inner(ng.table, oracle::values_of(ct.irreducibles[i]), oracle::values_of(ct.irreducibles[j]));
        CHECK(ip == Cyclotomic(i == j ? 1 : 0));
      }

    // Column orthogonality: sum_chi chi(a) conj chi(b) = |C(a)| [a ~ b].
    for (const auto& ca : cls)
      for (const auto& cb : cls) {
        Cyclotomic s;
        for (const auto& chi : ct.irreducibles) s += chi(ca[0]) * chi(cb[0]).conj();
        long expect = ca == cb ? static_cast<long>(g->order() / ca.size()) : 0;
        CHECK(s == Cyclotomic(expect));
      }
    CHECK(ct.irreducibles[0] == ClassFunction::trivial(g));
  }
}

TEST_CASE("known degree patterns") {
  CHECK(degrees(character_table(make(oracle::symmetric3().table))) == std::vector<long>{1, 1, 2});
  CHECK(degrees(character_table(make(oracle::quaternion8().table))) == std::vector<long>{1, 1, 1, 1, 2});
  CHECK(degrees(character_table(make(oracle::weyl_a3().table))) == std::vector<long>{1, 1, 2, 3, 3});
  CHECK(degrees(character_table(make(oracle::weyl_b2().table))) == std::vector<long>{1, 1, 1, 1, 2});

  // Z/4 has a faithful character with value i on a generator.
  auto z4 = make(oracle::cyclic(4).table);
  auto ct = character_table(z4);
  auto i = Cyclotomic::root_of_unity(1, 4);
  bool found = false;
  for (const auto& chi : ct.irreducibles) found = found || chi(1) == i;
  CHECK(found);
}

TEST_CASE("Q8 two-dimensional character") {
  // Elements 0..7 are 1, -1, i, -i, j, -j, k, -k.
  auto q8 = make(oracle::quaternion8().table);
  auto ct = character_table(q8);
  const auto& chi = ct.irreducibles.back();
  CHECK(chi(0) == Cyclotomic(2));
  CHECK(chi(1) == Cyclotomic(-2));
  for (int e = 2; e < 8; ++e) CHECK(chi(e).is_zero());
}

TEST_CASE("induction matches the brute-force formula and Frobenius reciprocity") {
  for (const auto& ng : oracle::builtin_groups()) {
    CAPTURE(ng.name);
    auto g = make(ng.table);
    auto ct = character_table(g);
    for (const auto& elems : ng.subgroups) {
      auto h = make_subgroup(g, elems);
      auto cth = character_table(h.group);
      for (const auto& psi : cth.irreducibles) {
        auto ind = induce(psi, h);
        oracle::Values lifted(g->order());
        for (std::size_t k = 0; k < h.embedding.size(); ++k)
          lifted[static_cast<std::size_t>(h.embedding[k])] = psi(static_cast<int>(k));
        CHECK(oracle::values_of(ind) == oracle::induce(ng.table, elems, lifted));
        for (const auto& chi : ct.irreducibles)
          CHECK(inner_product(ind, chi) == inner_product(psi, restrict(chi, h)));
      }
    }
  }
}

TEST_CASE("contragredient, decompose and combine") {
  auto z4 = make(oracle::cyclic(4).table);
  auto ct = character_table(z4);
  for (const auto& chi : ct.irreducibles) {
    auto dual = contragredient(chi);
    CHECK(ct.index_of(dual) >= 0);
    CHECK(contragredient(dual) == chi);
    for (int e = 0; e < 4; ++e) CHECK(dual(e) == chi(e).conj());
  }

  auto s3 = make(oracle::symmetric3().table);
  auto t3 = character_table(s3);
  auto reg = ClassFunction::zero(s3);
  for (const auto& chi : t3.irreducibles) reg += chi.degree() * chi;
  auto coeffs = decompose(reg, t3);
  CHECK(coeffs == std::vector<Cyclotomic>{1, 1, 2});
  CHECK(combine(coeffs, t3) == reg);
  CHECK(reg(0) == Cyclotomic(6));
  for (int e = 1; e < 6; ++e) CHECK(reg(e).is_zero());
}

TEST_CASE("class functions reject non-class data") {
  auto s3 = make(oracle::symmetric3().table);
  std::vector<Cyclotomic> v(6, Cyclotomic(0));
  v[1] = 1;
  CHECK_THROWS_AS(ClassFunction::from_elements(s3, v), InvalidInput);
}

TEST_CASE("from_table validates the group laws") {
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1, 1}}), InvalidInput);
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1}}), InvalidInput);
  auto g = FiniteGroup::from_permutations({{1, 2, 0}});
  CHECK(g.order() == 3);
  CHECK(g.is_abelian());
  CHECK(g.exponent() == 3);
}
