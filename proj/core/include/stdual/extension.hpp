#pragma once

#include <string>
#include <vector>

#include "stdual/chartheory.hpp"

namespace stdual {

// Central extension 1 -> Z -> total -> quotient -> 1 together with a
// character chi of Z. chi is stored in parallel with center.
struct CentralExtension {
  GroupPtr total;
  std::vector<int> center;
  GroupPtr quotient;
  std::vector<int> projection;  // total element -> quotient element
  std::vector<Cyclotomic> chi;

  // Z trivial, total == quotient.
  static CentralExtension split(const GroupPtr& g);

  // Every violated invariant, each with a witness; empty when valid.
  std::vector<std::string> violations() const;

  bool is_split() const { return center.size() == 1; }
  bool chi_trivial() const;
  // chi(z); z must be a center element.
  const Cyclotomic& chi_at(int z) const;
  // Total elements lying over the given quotient elements.
  std::vector<int> preimage(const std::vector<int>& quotient_elements) const;
};

// Extension over a subgroup of the quotient: its preimage in total with the
// same Z and chi.
struct SubExtension {
  Subgroup total_sub;
  Subgroup quotient_sub;
  CentralExtension ext;
};

SubExtension sub_extension(const CentralExtension& ext, const std::vector<int>& quotient_elements);

// Irreducibles of the total group with Z-central character chi.
struct IsotypicFamily {
  CharacterTable table;          // full table of the total group
  std::vector<std::size_t> members;  // indices into table, in table order

  std::size_t size() const { return members.size(); }
  const ClassFunction& at(std::size_t i) const { return table.irreducibles[members[i]]; }
  std::vector<ClassFunction> characters() const;
};

IsotypicFamily chi_isotypic(const CentralExtension& ext);

// Coefficients theta_{rho^vee}(r) of the triplet character attached to r in
// the basis of the isotypic family.
std::vector<Cyclotomic> triplet_expand(const IsotypicFamily& family, int r);
std::vector<Cyclotomic> triplet_expand(const CentralExtension& ext, int r);

// Coefficients |total|^-1 theta_rho(r) over all total elements r.
std::vector<Cyclotomic> triplet_invert(const IsotypicFamily& family, std::size_t rho);
std::vector<Cyclotomic> triplet_invert(const CentralExtension& ext, std::size_t rho);

// chi is trivial on the Z-stabilizer of the conjugacy class of r.
bool is_essential(const CentralExtension& ext, int r);

// Z-translation orbits of essential conjugacy classes; each orbit lists
// total-group class indices, smallest first.
std::vector<std::vector<std::size_t>> essential_orbits(const CentralExtension& ext);

}  // namespace stdual
