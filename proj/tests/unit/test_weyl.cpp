#include <map>
#include <set>

#include "doctest.h"
#include "oracle.hpp"
#include "stdual/errors.hpp"
#include "stdual/weyl.hpp"

using namespace stdual;

namespace {

std::vector<std::vector<std::size_t>> all_subsets(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t k = 0; k < n; ++k)
      if (mask & (1u << k)) s.push_back(k);
    out.push_back(s);
  }
  return out;
}

// Positive roots made negative by w.
std::size_t inversions(const RootSystem& rs, const Matrix& w) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < rs.roots.size(); ++i) {
    if (!rs.is_positive(i)) continue;
    int j = rs.index_of(w * rs.roots[i]);
    if (j >= 0 && !rs.is_positive(static_cast<std::size_t>(j))) ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("Weyl group orders match the classical formulas") {
  for (auto [f, n] : std::vector<std::pair<char, int>>{{'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'B', 2}, {'B', 3},
                                                       {'B', 4}, {'C', 2}, {'C', 3}, {'C', 4}, {'D', 3}, {'D', 4}}) {
    CAPTURE(f);
    CAPTURE(n);
    auto w = weyl_group(build_root_system(f, n));
    CHECK(static_cast<long>(w.order()) == oracle::weyl_order(f, n));
    CHECK(w.group->order() == w.order());
  }
}

TEST_CASE("stored words are reduced") {
  auto rs = build_root_system('B', 3);
  auto w = weyl_group(rs);
  for (const auto& e : w.elements) {
    CHECK(e.word.size() == inversions(rs, e.matrix));
    Matrix prod = Matrix::identity(rs.ambient_dim);
    for (int k : e.word) prod = prod * rs.reflection(rs.simple_roots[static_cast<std::size_t>(k)]);
    CHECK(prod == e.matrix);
  }
  CHECK(w.elements[0].word.empty());
  CHECK(w.index_of(Matrix::identity(3)) == 0);
}

TEST_CASE("Weyl size cap") {
  CHECK_THROWS_AS(weyl_group(build_root_system('B', 5), 1000), ResourceLimit);
}

TEST_CASE("parabolic subgroups") {
  auto rs = build_root_system('A', 3);
  auto w = weyl_group(rs);
  CHECK(parabolic_subgroup(w, {}).size() == 1);
  CHECK(parabolic_subgroup(w, {0, 2}).size() == 4);
  CHECK(parabolic_subgroup(w, {0, 1}).size() == 6);
  CHECK(parabolic_positive_roots(rs, {0, 1}).size() == 3);
}

TEST_CASE("documented coset representative examples") {
  auto rs = build_root_system('A', 2);
  auto m0 = levi_from_subset(rs, {});
  auto g = levi_from_subset(rs, {0, 1});
  CHECK(coset_representatives(rs, m0, m0).size() == 6);
  CHECK(coset_representatives(rs, g, g).size() == 1);
  CHECK(coset_representatives(rs, m0, levi_from_subset(rs, {0})).size() == 3);
}

TEST_CASE("double cosets: brute-force count and minimal representatives") {
  for (auto [f, n] : std::vector<std::pair<char, int>>{{'A', 2}, {'B', 2}, {'A', 3}}) {
    auto rs = build_root_system(f, n);
    auto w = weyl_group(rs);
    const auto& grp = *w.group;
    for (const auto& i : all_subsets(rs.rank()))
      for (const auto& j : all_subsets(rs.rank())) {
        auto m = levi_from_subset(rs, i);
        auto l = levi_from_subset(rs, j);
        auto wm = parabolic_subgroup(w, i);
        auto wl = parabolic_subgroup(w, j);

        // Brute-force double cosets W^L x W^M.
        std::map<int, int> coset_of;
        int count = 0;
        for (std::size_t x = 0; x < w.order(); ++x) {
          if (coset_of.count(static_cast<int>(x))) continue;
          for (int a : wl)
            for (int b : wm) coset_of[grp.mul(grp.mul(a, static_cast<int>(x)), b)] = count;
          ++count;
        }

        auto reps = coset_representative_indices(w, m, l);
        CHECK(reps.size() == static_cast<std::size_t>(count));
        std::set<int> hit;
        for (int r : reps) {
          hit.insert(coset_of.at(r));
          // Unique element of minimal length in its double coset.
          for (std::size_t x = 0; x < w.order(); ++x)
            if (coset_of.at(static_cast<int>(x)) == coset_of.at(r) && static_cast<int>(x) != r)
              CHECK(w.elements[x].word.size() > w.elements[static_cast<std::size_t>(r)].word.size());
        }
        CHECK(hit.size() == reps.size());

        std::string witness;
        CHECK(double_cosets_partition(w, m, l, &witness));
        CHECK(witness.empty());
      }
  }
}

TEST_CASE("coset representatives need standard Levis") {
  auto rs = build_root_system('A', 2);
  LeviDescriptor odd{Subspace::span({{1, 2, 3}}, 3), std::nullopt};
  CHECK_THROWS_AS(coset_representatives(rs, odd, odd), InvalidInput);
}

TEST_CASE("word strings are 1-based") {
  CHECK(word_string({0, 1, 0}) == "s1.s2.s1");
  CHECK(word_string({}) == "1");
}
