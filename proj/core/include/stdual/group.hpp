#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "stdual/matrix.hpp"

namespace stdual {

inline constexpr std::size_t kDefaultGroupCap = 10000;

// A finite group given by its full composition table. Elements are the
// indices 0..order()-1. Conjugacy classes are computed once at construction
// and ordered by smallest member index.
class FiniteGroup {
 public:
  // Validates closure, associativity, identity and inverses.
  static FiniteGroup from_table(const std::vector<std::vector<int>>& table);

  // Closure of permutation generators (0-based image lists). Element 0 is
  // the identity; the rest follow breadth-first order of right
  // multiplication by the generators, in generator order.
  static FiniteGroup from_permutations(const std::vector<std::vector<int>>& generators,
                                       std::size_t cap = kDefaultGroupCap);

  // Closure of invertible rational matrices, enumerated like
  // from_permutations. The matrices become the group's linear action.
  static FiniteGroup from_matrices(const std::vector<Matrix>& generators, std::size_t cap = kDefaultGroupCap);

  // Table produced by a trusted generator (no associativity check).
  static FiniteGroup from_generated(std::vector<int> flat_table, std::size_t order,
                                    std::optional<std::vector<Matrix>> action,
                                    std::vector<std::string> labels);

  std::size_t order() const { return n_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + static_cast<std::size_t>(b)]; }
  int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  int conj(int g, int x) const { return mul(mul(inv(x), g), x); }  // x^-1 g x
  int power(int a, long k) const;
  int element_order(int a) const { return orders_[static_cast<std::size_t>(a)]; }
  int exponent() const { return exponent_; }

  std::size_t num_classes() const { return class_reps_.size(); }
  int class_of(int g) const { return class_of_[static_cast<std::size_t>(g)]; }
  int class_rep(std::size_t c) const { return class_reps_[c]; }
  const std::vector<int>& class_members(std::size_t c) const { return class_members_[c]; }
  std::size_t class_size(std::size_t c) const { return class_members_[c].size(); }
  // Class of g^k where g is the representative of class c.
  int class_power(std::size_t c, long k) const { return class_of(power(class_rep(c), k)); }

  bool is_abelian() const;
  bool is_central(int z) const;

  const std::optional<std::vector<Matrix>>& linear_action() const { return action_; }
  std::string label(int g) const;

  const std::vector<int>& flat_table() const { return table_; }

 private:
  FiniteGroup() = default;
  void finish();

  std::size_t n_ = 0;
  std::vector<int> table_;
  int identity_ = 0;
  std::vector<int> inverse_;
  std::vector<int> orders_;
  int exponent_ = 1;
  std::vector<int> class_of_;
  std::vector<int> class_reps_;
  std::vector<std::vector<int>> class_members_;
  std::optional<std::vector<Matrix>> action_;
  std::vector<std::string> labels_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// A subgroup H <= G, materialized as its own FiniteGroup. embedding maps the
// subgroup's element indices to the parent's, in increasing parent order.
struct Subgroup {
  GroupPtr parent;
  GroupPtr group;
  std::vector<int> embedding;
  std::vector<int> index_in_subgroup;  // parent index -> subgroup index or -1

  bool contains(int parent_element) const {
    return index_in_subgroup[static_cast<std::size_t>(parent_element)] >= 0;
  }
};

// Throws InvalidInput if elements is not closed under the parent's table.
Subgroup make_subgroup(const GroupPtr& parent, std::vector<int> elements);

// Subgroup generated by the given parent elements.
std::vector<int> generated_subgroup(const FiniteGroup& g, const std::vector<int>& generators);

}  // namespace stdual
