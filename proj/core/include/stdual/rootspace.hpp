#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "stdual/matrix.hpp"

namespace stdual {

inline constexpr int kDefaultRankCap = 5;

// Reduced root system in an explicit rational realization. Roots are
// covectors on a_0, identified with vectors through the standard dot
// product. Positive roots are listed first, then their negatives in the
// same order.
struct RootSystem {
  std::size_t ambient_dim = 0;
  std::vector<Vector> roots;
  std::vector<std::size_t> simple_roots;  // indices into roots, Bourbaki order
  std::string family_tag;                 // "A2", "B3", ..., or "explicit"
  std::vector<Vector> simple_coordinates;  // per root, in the simple basis

  std::size_t rank() const { return simple_roots.size(); }
  const Vector& simple(std::size_t k) const { return roots[simple_roots[k]]; }
  bool is_positive(std::size_t root) const;
  // Index of a root equal to v, or -1.
  int index_of(const Vector& v) const;
  // Reflection s_alpha on a_0: x - 2 (alpha.x)/(alpha.alpha) alpha.
  Matrix reflection(std::size_t root) const;
};

// Standard realizations: A_n in Q^{n+1} (e_i - e_j), B_n, C_n, D_n in Q^n.
// Rank bounds: A >= 1, B and C >= 2, D >= 3, all <= rank_cap.
RootSystem build_root_system(char family, int rank, int rank_cap = kDefaultRankCap);

// Validates the root-system invariants; throws InvalidInput naming the
// first violation.
RootSystem explicit_root_system(std::size_t ambient_dim, std::vector<Vector> roots,
                                std::vector<std::size_t> simple_roots);

// A linear subspace of Q^n held by its reduced row echelon basis, which is
// unique per subspace.
class Subspace {
 public:
  Subspace() = default;
  static Subspace span(const std::vector<Vector>& vectors, std::size_t ambient_dim);
  static Subspace whole(std::size_t ambient_dim);
  static Subspace kernel(const std::vector<Vector>& covectors, std::size_t ambient_dim);

  const Matrix& basis() const { return basis_; }
  std::size_t dim() const { return basis_.rows(); }
  std::size_t ambient_dim() const { return ambient_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  // Covectors vanishing on the subspace (a basis).
  std::vector<Vector> annihilator() const;

  // Coordinates of v (which must lie in the subspace) in the canonical basis.
  Vector coordinates(const Vector& v) const;
  Vector from_coordinates(const Vector& c) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;
  // Canonical bases compared entry by entry.
  friend bool lex_less(const Subspace& a, const Subspace& b);

  std::string str() const;

 private:
  Subspace(Matrix basis, std::size_t ambient);
  Matrix basis_;
  std::size_t ambient_ = 0;
  std::vector<std::size_t> pivots_;
};

// A Levi subgroup, represented by its split component a_L inside a_0.
struct LeviDescriptor {
  Subspace split_component;
  std::optional<std::vector<std::size_t>> subset;  // 0-based simple-root indices when standard

  std::size_t dim_A() const { return split_component.dim(); }
  friend bool operator==(const LeviDescriptor& a, const LeviDescriptor& b) {
    return a.split_component == b.split_component;
  }
};

// a_L = intersection of ker(alpha) over alpha in I (0-based indices).
LeviDescriptor levi_from_subset(const RootSystem& rs, const std::vector<std::size_t>& subset);

// Subset I with split_component = cap ker(alpha_i), if one exists.
std::optional<std::vector<std::size_t>> standard_subset(const RootSystem& rs, const Subspace& s);

// Nonzero restrictions of the roots to a_M, in coordinates of the canonical
// basis of a_M, reduced to primitive integer representatives up to positive
// scaling. Ordered by first appearance in the root list.
std::vector<Vector> restricted_roots(const RootSystem& rs, const LeviDescriptor& m);

// Primitive positive-scaling representative of a restricted covector.
inline Vector reduce_covector(const Vector& c) { return primitive(c); }

// All distinct a_M ∩ (∩_{alpha in S} ker alpha); decreasing dim_A, ties
// broken lexicographically on the canonical basis.
std::vector<LeviDescriptor> levi_lattice(const RootSystem& rs, const LeviDescriptor& m);

// Whether a_L meets the closed cone {alpha >= 0, alpha in delta} in an open
// subset of a_L. delta_sigma holds covectors in a_M coordinates; each must
// be (a positive multiple of) a restricted root.
bool arthur_compatible(const RootSystem& rs, const LeviDescriptor& m, const std::vector<Vector>& delta_sigma,
                       const LeviDescriptor& l);

}  // namespace stdual
