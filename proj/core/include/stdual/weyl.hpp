#pragma once

#include <string>
#include <vector>

#include "stdual/group.hpp"
#include "stdual/rootspace.hpp"

namespace stdual {

inline constexpr std::size_t kWeylSizeCap = 10000;

struct WeylElement {
  Matrix matrix;                  // action on a_0
  std::vector<int> word;          // reduced word, 0-based simple-reflection indices
  std::vector<int> permutation;   // root index -> root index
};

// W_0 with element 0 the identity; elements in breadth-first order of word
// length, so every stored word is reduced.
struct WeylGroup {
  RootSystem roots;
  GroupPtr group;  // linear_action() holds the matrices
  std::vector<WeylElement> elements;

  std::size_t order() const { return elements.size(); }
  // Element index whose matrix is m, or -1.
  int index_of(const Matrix& m) const;
};

WeylGroup weyl_group(const RootSystem& rs, std::size_t cap = kWeylSizeCap);

// Positive roots that are combinations of the simple roots in subset.
std::vector<std::size_t> parabolic_positive_roots(const RootSystem& rs, const std::vector<std::size_t>& subset);

// Elements of the standard parabolic subgroup generated by s_i, i in subset.
std::vector<int> parabolic_subgroup(const WeylGroup& w, const std::vector<std::size_t>& subset);

// {w : w(Phi_M^+) in Phi^+ and w^-1(Phi_L^+) in Phi^+} as element indices,
// ascending. M and L must be standard.
std::vector<int> coset_representative_indices(const WeylGroup& w, const LeviDescriptor& m, const LeviDescriptor& l);
std::vector<WeylElement> coset_representatives(const RootSystem& rs, const LeviDescriptor& m, const LeviDescriptor& l);

// Whether the double cosets W^L w W^M over the representatives are pairwise
// disjoint and cover W_0. On failure a description is written to witness.
bool double_cosets_partition(const WeylGroup& w, const LeviDescriptor& m, const LeviDescriptor& l,
                             std::string* witness = nullptr);

std::string word_string(const std::vector<int>& word);

}  // namespace stdual
