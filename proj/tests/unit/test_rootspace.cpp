#include <random>
#include <set>

#include "doctest.h"
#include "oracle.hpp"
#include "stdual/errors.hpp"
#include "stdual/rootspace.hpp"

using namespace stdual;

namespace {

std::size_t expected_root_count(char family, int n) {
  switch (family) {
    case 'A':
      return static_cast<std::size_t>(n * (n + 1));
    case 'B':
    case 'C':
      return static_cast<std::size_t>(2 * n * n);
    default:
      return static_cast<std::size_t>(2 * n * (n - 1));
  }
}

// Number of set partitions of {0..n-1}: the flats of the braid arrangement.
std::size_t bell(int n) {
  std::vector<std::vector<std::size_t>> t{{1}};
  for (int i = 1; i <= n; ++i) {
    std::vector<std::size_t> row{t.back().back()};
    for (std::size_t k = 0; k < t.back().size(); ++k) row.push_back(row.back() + t.back()[k]);
    t.push_back(row);
  }
  return t[static_cast<std::size_t>(n)][0];
}

// delta . (basis of a_L) in a_L coordinates, zero rows dropped.
std::vector<Vector> restricted_to(const LeviDescriptor& m, const std::vector<Vector>& delta, const LeviDescriptor& l) {
  std::vector<Vector> out;
  const auto& b = l.split_component.basis();
  for (const auto& d : delta) {
    Vector c(b.rows());
    for (std::size_t k = 0; k < b.rows(); ++k) c[k] = dot(d, m.split_component.coordinates(b.row(k)));
    if (!is_zero(c)) out.push_back(c);
  }
  return out;
}

const std::vector<std::pair<char, int>> kSystems{{'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'A', 5},
                                                 {'B', 2}, {'B', 3}, {'B', 4}, {'B', 5}, {'C', 2},
                                                 {'C', 3}, {'C', 4}, {'C', 5}, {'D', 3}, {'D', 4},
                                                 {'D', 5}};

}  // namespace

TEST_CASE("classical root systems") {
  for (auto [f, n] : kSystems) {
    CAPTURE(f);
    CAPTURE(n);
    auto rs = build_root_system(f, n);
    CHECK(rs.roots.size() == expected_root_count(f, n));
    CHECK(rs.rank() == static_cast<std::size_t>(n));
    CHECK(rs.ambient_dim == static_cast<std::size_t>(f == 'A' ? n + 1 : n));

    const std::size_t half = rs.roots.size() / 2;
    for (std::size_t i = 0; i < rs.roots.size(); ++i) {
      CHECK(rs.is_positive(i) == (i < half));
      Vector neg = rs.roots[i];
      for (auto& x : neg) x = -x;
      CHECK(rs.index_of(neg) == static_cast<int>(i < half ? i + half : i - half));
    }
    // Reflection closure.
    for (std::size_t a = 0; a < rs.roots.size(); ++a) {
      Matrix s = rs.reflection(a);
      for (const auto& b : rs.roots) CHECK(rs.index_of(s * b) >= 0);
    }
    // Positive roots are non-negative integer combinations of simple roots.
    for (std::size_t i = 0; i < half; ++i) {
      Vector sum(rs.ambient_dim);
      for (std::size_t k = 0; k < rs.rank(); ++k) {
        CHECK(rs.simple_coordinates[i][k] >= 0);
        CHECK(rs.simple_coordinates[i][k].get_den() == 1);
        for (std::size_t c = 0; c < sum.size(); ++c) sum[c] += rs.simple_coordinates[i][k] * rs.simple(k)[c];
      }
      CHECK(sum == rs.roots[i]);
    }
  }
}

TEST_CASE("rank bounds and unknown families") {
  CHECK_THROWS_AS(build_root_system('B', 1), InvalidInput);
  CHECK_THROWS_AS(build_root_system('D', 2), InvalidInput);
  CHECK_THROWS_AS(build_root_system('A', 6), InvalidInput);
  CHECK_THROWS_AS(build_root_system('E', 6), InvalidInput);
  CHECK_NOTHROW(build_root_system('A', 6, 6));
}

TEST_CASE("explicit root systems are validated") {
  CHECK_NOTHROW(explicit_root_system(1, {{1}, {-1}}, {0}));
  CHECK_THROWS_AS(explicit_root_system(1, {{1}}, {0}), InvalidInput);
  CHECK_THROWS_AS(explicit_root_system(1, {{1}, {-1}, {2}, {-2}}, {0}), InvalidInput);
  CHECK_THROWS_AS(explicit_root_system(2, {{1, 0}, {-1, 0}, {1, 1}, {-1, -1}}, {0, 2}), InvalidInput);
  CHECK_THROWS_AS(explicit_root_system(1, {{1}, {-1}}, {3}), InvalidInput);
}

TEST_CASE("subspaces are canonical") {
  auto a = Subspace::span({{1, 1, 0}, {2, 2, 0}, {0, 1, 1}}, 3);
  auto b = Subspace::span({{1, 2, 1}, {1, 0, -1}}, 3);
  CHECK(a.dim() == 2);
  CHECK(a == b);
  auto k = Subspace::kernel({{1, -1, 1}}, 3);
  CHECK(k == a);
  CHECK(a.contains(Vector{3, 4, 1}));
  CHECK_FALSE(a.contains(Vector{1, 0, 0}));

  auto line = Subspace::span({{1, 0, 0}}, 3);
  CHECK(a.intersect(line).dim() == 0);
  CHECK(Subspace::whole(3).intersect(a) == a);
  auto ann = a.annihilator();
  REQUIRE(ann.size() == 1);
  CHECK(primitive(ann[0]) == Vector{1, -1, 1});

  Vector v{2, 3, 1};
  CHECK(a.from_coordinates(a.coordinates(v)) == v);
  CHECK(Subspace::whole(2).contains(Subspace::span({{1, 1}}, 2)));
}

TEST_CASE("standard Levis") {
  auto rs = build_root_system('A', 3);
  for (unsigned mask = 0; mask < 8; ++mask) {
    std::vector<std::size_t> subset;
    for (std::size_t k = 0; k < 3; ++k)
      if (mask & (1u << k)) subset.push_back(k);
    auto l = levi_from_subset(rs, subset);
    CHECK(l.dim_A() == 4 - subset.size());
    auto back = standard_subset(rs, l.split_component);
    REQUIRE(back.has_value());
    CHECK(*back == subset);
  }
  // A line through a non-standard direction is no standard split component.
  CHECK_FALSE(standard_subset(rs, Subspace::span({{1, 2, 3, 4}}, 4)).has_value());
  CHECK_THROWS_AS(levi_from_subset(rs, {3}), InvalidInput);
}

TEST_CASE("restricted roots") {
  auto b2 = build_root_system('B', 2);
  auto m0 = levi_from_subset(b2, {});
  CHECK(restricted_roots(b2, m0).size() == 8);

  auto a2 = build_root_system('A', 2);
  auto m1 = levi_from_subset(a2, {0});
  auto rr = restricted_roots(a2, m1);
  CHECK(rr.size() == 2);
  for (const auto& r : rr) CHECK(primitive(r) == r);

  CHECK(restricted_roots(a2, levi_from_subset(a2, {0, 1})).empty());
}

TEST_CASE("levi lattice") {
  for (int n = 1; n <= 4; ++n) {
    auto rs = build_root_system('A', n);
    auto lat = levi_lattice(rs, levi_from_subset(rs, {}));
    CHECK(lat.size() == bell(n + 1));
  }
  auto b2 = build_root_system('B', 2);
  auto lat = levi_lattice(b2, levi_from_subset(b2, {}));
  CHECK(lat.size() == 6);

  auto a3 = build_root_system('A', 3);
  auto m = levi_from_subset(a3, {0});
  auto l3 = levi_lattice(a3, m);
  CHECK(l3.front() == m);
  CHECK(l3.back() == levi_from_subset(a3, {0, 1, 2}));
  for (std::size_t i = 0; i < l3.size(); ++i)
    for (std::size_t j = 0; j < l3.size(); ++j) {
      if (i != j && l3[i].split_component.contains(l3[j].split_component)) CHECK(l3[i].dim_A() > l3[j].dim_A());
      if (i < j) CHECK(l3[i].dim_A() >= l3[j].dim_A());
      if (i != j) CHECK_FALSE(l3[i] == l3[j]);
    }
}

TEST_CASE("arthur compatibility: documented cases") {
  auto b2 = build_root_system('B', 2);
  auto m0 = levi_from_subset(b2, {});
  auto lat = levi_lattice(b2, m0);
  for (const auto& l : lat) CHECK(arthur_compatible(b2, m0, {}, l));

  auto alpha1 = restricted_roots(b2, m0)[static_cast<std::size_t>(0)];
  CHECK(alpha1 == b2.simple(0));
  auto l2 = levi_from_subset(b2, {1});
  CHECK(arthur_compatible(b2, m0, {alpha1}, l2));
  CHECK(arthur_compatible(b2, m0, {alpha1}, lat.back()));

  CHECK_THROWS_AS(arthur_compatible(b2, m0, {Vector{1, 2}}, l2), InvalidInput);
}

TEST_CASE("arthur compatibility agrees with Fourier-Motzkin and is monotone") {
  std::mt19937 rng(7);
  for (auto [f, n] : std::vector<std::pair<char, int>>{{'A', 2}, {'B', 2}, {'A', 3}, {'B', 3}}) {
    auto rs = build_root_system(f, n);
    auto m = levi_from_subset(rs, {});
    auto rr = restricted_roots(rs, m);
    auto lat = levi_lattice(rs, m);
    std::bernoulli_distribution pick(0.3);
    for (int trial = 0; trial < 12; ++trial) {
      std::vector<Vector> delta;
      for (const auto& r : rr)
        if (pick(rng)) delta.push_back(r);
      for (const auto& l : lat) {
        const bool got = arthur_compatible(rs, m, delta, l);
        CHECK(got == oracle::strict_cone_feasible(restricted_to(m, delta, l), l.dim_A()));
        if (got && !delta.empty()) {
          auto fewer = delta;
          fewer.pop_back();
          CHECK(arthur_compatible(rs, m, fewer, l));
        }
      }
    }
  }
}
