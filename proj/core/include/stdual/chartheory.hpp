#pragma once

#include <string>
#include <vector>

#include "stdual/cyclotomic.hpp"
#include "stdual/group.hpp"

namespace stdual {

inline constexpr std::size_t kCharacterTableCap = 512;
inline constexpr int kExponentCap = 64;

// Function on a finite group, stored by conjugacy class.
class ClassFunction {
 public:
  ClassFunction(GroupPtr group, std::vector<Cyclotomic> class_values);

  static ClassFunction zero(const GroupPtr& group);
  static ClassFunction trivial(const GroupPtr& group);
  // Per-element values; throws InvalidInput when not constant on classes.
  static ClassFunction from_elements(const GroupPtr& group, const std::vector<Cyclotomic>& element_values);

  const GroupPtr& group() const { return group_; }
  const std::vector<Cyclotomic>& values() const { return values_; }
  const Cyclotomic& at_class(std::size_t c) const { return values_[c]; }
  const Cyclotomic& operator()(int element) const {
    return values_[static_cast<std::size_t>(group_->class_of(element))];
  }
  const Cyclotomic& degree() const { return (*this)(group_->identity()); }
  bool is_zero() const;

  ClassFunction operator-() const;
  ClassFunction& operator+=(const ClassFunction& o);
  ClassFunction& operator-=(const ClassFunction& o);
  ClassFunction& operator*=(const Cyclotomic& s);
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  friend ClassFunction operator*(const Cyclotomic& s, ClassFunction a) { return a *= s; }

  // Same group object and equal values.
  friend bool operator==(const ClassFunction& a, const ClassFunction& b);

  std::string str() const;

 private:
  void require_same_group(const ClassFunction& o) const;

  GroupPtr group_;
  std::vector<Cyclotomic> values_;
};

struct CharacterTable {
  GroupPtr group;
  std::vector<ClassFunction> irreducibles;

  std::size_t size() const { return irreducibles.size(); }
  // Index of an irreducible equal to chi, or -1.
  int index_of(const ClassFunction& chi) const;
};

struct ConjugacyClasses {
  std::vector<int> representatives;
  std::vector<std::size_t> sizes;
  std::vector<int> class_of;
};

ConjugacyClasses conjugacy_classes(const FiniteGroup& g);

// All irreducible characters, sorted by degree, then by class values
// (larger first, so the trivial character leads). Exact: values are lifted
// from a modular splitting of the class algebra.
CharacterTable character_table(const GroupPtr& g);

// |G|^-1 sum_g a(g) conj(b(g)).
Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b);

ClassFunction restrict(const ClassFunction& psi, const Subgroup& h);
ClassFunction induce(const ClassFunction& theta, const Subgroup& h);
ClassFunction contragredient(const ClassFunction& theta);

// Multiplicities <theta, chi> over the table.
std::vector<Cyclotomic> decompose(const ClassFunction& theta, const CharacterTable& table);
ClassFunction combine(const std::vector<Cyclotomic>& coefficients, const CharacterTable& table);

}  // namespace stdual
