#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "stdual/cone.hpp"
#include "stdual/cyclotomic.hpp"
#include "stdual/errors.hpp"
#include "stdual/matrix.hpp"

using namespace stdual;

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(to_string(parse_rational("10/4")) == "5/2");
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidInput);
  CHECK_THROWS_AS(parse_rational("x"), InvalidInput);
  CHECK_THROWS_AS(parse_rational("1/-2"), InvalidInput);
  CHECK_THROWS_AS(parse_rational(""), InvalidInput);
}

TEST_CASE("primitive vectors") {
  CHECK(primitive({Rational(2, 3), Rational(-4, 3)}) == Vector{1, -2});
  CHECK(primitive({0, 0}) == Vector{0, 0});
  CHECK(primitive({Rational(-1, 2), 0}) == Vector{-1, 0});
}

TEST_CASE("matrix rank, nullspace and inverse") {
  Matrix m = Matrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}, 3);
  CHECK(rank(m) == 2);
  Matrix k = nullspace(m, 3);
  REQUIRE(k.rows() == 1);
  CHECK(is_zero(m * k.row(0)));
  CHECK_FALSE(inverse(m).has_value());

  Matrix a = Matrix::from_rows({{2, 1}, {1, 1}}, 2);
  auto inv = inverse(a);
  REQUIRE(inv.has_value());
  CHECK(*inv * a == Matrix::identity(2));
  CHECK(inverse(Matrix(0, 0)).has_value());
}

TEST_CASE("cyclotomic arithmetic") {
  auto i = Cyclotomic::root_of_unity(1, 4);
  CHECK(i * i == Cyclotomic(-1));
  CHECK((i * i).is_rational());
  CHECK(i.conj() == -i);

  // 1 + w + w^2 = 0 for a primitive cube root.
  auto w = Cyclotomic::root_of_unity(1, 3);
  CHECK((Cyclotomic(1) + w + w * w).is_zero());

  // Values of different conductor compare after lifting.
  auto z12 = Cyclotomic::root_of_unity(3, 12);
  CHECK(z12 == i);
  CHECK(Cyclotomic::root_of_unity(Rational(1, 2)) == Cyclotomic(-1));

  Rational q;
  REQUIRE(w.conj().root_of_unity_exponent(q));
  CHECK(q == Rational(2, 3));
  CHECK_FALSE(Cyclotomic(2).root_of_unity_exponent(q));
}

TEST_CASE("cyclotomic polynomials") {
  // Phi_12 = x^4 - x^2 + 1
  std::vector<Integer> phi12{1, 0, -1, 0, 1};
  CHECK(cyclotomic_polynomial(12) == phi12);
  // Phi_p = 1 + x + ... + x^{p-1}
  CHECK(cyclotomic_polynomial(7) == std::vector<Integer>(7, 1));
}

TEST_CASE("conductor cap") {
  CHECK_THROWS_AS(Cyclotomic::root_of_unity(1, kMaxConductor + 1), ResourceLimit);
}

TEST_CASE("strict cone feasibility agrees with Fourier-Motzkin") {
  std::mt19937 rng(20261016);
  std::uniform_int_distribution<int> coef(-2, 2), count(1, 5), dimd(1, 3);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t dim = static_cast<std::size_t>(dimd(rng));
    std::vector<Vector> cs(static_cast<std::size_t>(count(rng)), Vector(dim));
    for (auto& c : cs)
      for (auto& x : c) x = coef(rng);
    auto point = strict_cone_point(cs, dim);
    CAPTURE(trial);
    REQUIRE(point.has_value() == oracle::strict_cone_feasible(cs, dim));
    if (point)
      for (const auto& c : cs) CHECK(dot(c, *point) > 0);
  }
}

TEST_CASE("strict cone edge cases") {
  CHECK(strict_cone_feasible({}, 2));
  CHECK_FALSE(strict_cone_feasible({{1, 0}, {-1, 0}}, 2));
  CHECK_FALSE(strict_cone_feasible({{0, 0}}, 2));
  CHECK(strict_cone_feasible({{1, -1}, {0, 1}}, 2));
}
