#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stdual/rgroup.hpp"

namespace stdual {

// Square matrix over the isotypic basis; entries[i][j] is the coefficient
// of basis[i] in the image of basis[j].
struct OperatorMatrix {
  std::vector<ClassFunction> basis;
  std::vector<std::vector<Cyclotomic>> entries;

  std::size_t size() const { return basis.size(); }
  bool is_identity() const;
  OperatorMatrix operator*(const OperatorMatrix& rhs) const;
  std::string str() const;
};

// The preimage R~^L of the pointwise stabilizer of a_L, with its own
// character table and isotypic family.
struct Level {
  std::size_t levi = 0;
  GroupPtr group;
  std::vector<int> embedding;  // level element -> total element
  std::vector<int> local;      // total element -> level element or -1
  CentralExtension ext;
  IsotypicFamily family;
};

// Duality and Steinberg computations for one scenario under one Levi
// family. Levels are built for every family member and for G.
class DualityEngine {
 public:
  DualityEngine(const Scenario& s, LeviFamily family);
  explicit DualityEngine(const Scenario& s) : DualityEngine(s, s.default_family()) {}

  const Scenario& scenario() const { return *s_; }
  LeviFamily policy() const { return policy_; }
  const std::vector<std::size_t>& family() const { return family_; }
  bool in_family(std::size_t levi) const;

  std::size_t top_index() const { return s_->levi_g(); }
  const Level& level(std::size_t levi) const;
  const Level& top() const { return level(top_index()); }

  // R~^inner inside R~^outer; requires a_outer inside a_inner.
  Subgroup inclusion(std::size_t inner, std::size_t outer) const;

  // D at level t: sum over family members K with a_K containing a_t of
  // (-1)^{dim A_K} Ind Res, applied to a class function on level t.
  ClassFunction dual(std::size_t t, const ClassFunction& f) const;
  ClassFunction dual(const ClassFunction& f) const { return dual(top_index(), f); }
  OperatorMatrix matrix(std::size_t t) const;
  OperatorMatrix matrix() const { return matrix(top_index()); }

  // Designated character, else the trivial character when chi is trivial.
  // Throws ConfigurationError otherwise.
  ClassFunction base(std::size_t levi) const;
  ClassFunction steinberg(std::size_t t) const;
  ClassFunction steinberg() const { return steinberg(top_index()); }

  // Drops the components outside the isotypic family of level t.
  ClassFunction project(std::size_t t, const ClassFunction& f) const;

  // Sum over family members L with a_L inside a_k of (-1)^{dim A_k - dim A_L}.
  long euler(std::size_t k) const;

 private:
  const Scenario* s_;
  LeviFamily policy_;
  std::vector<std::size_t> family_;
  std::vector<std::optional<Level>> levels_;
};

OperatorMatrix duality_operator(const Scenario& s, LeviFamily family);
OperatorMatrix duality_operator(const Scenario& s);

ClassFunction steinberg(const Scenario& s, LeviFamily family);
ClassFunction steinberg(const Scenario& s);

// theta (on the total group) is nonzero somewhere over the regular set.
bool is_elliptic_character(const Scenario& s, const ClassFunction& theta);

// Throws InvalidInput when k is not in the family.
long euler_check(const Scenario& s, std::size_t k, LeviFamily family);
long euler_check(const Scenario& s, std::size_t k);

}  // namespace stdual
