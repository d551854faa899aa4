#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stdual/extension.hpp"
#include "stdual/rootspace.hpp"

namespace stdual {

enum class LeviFamily { arthur, all, support };

std::string to_string(LeviFamily f);
// Throws InvalidInput on unknown names.
LeviFamily parse_levi_family(std::string_view name);

// ---------------------------------------------------------------------------
// Scenario documents. Simple-root indices and Weyl-word letters are 1-based,
// matching the textual format; every other index is 0-based.

struct RootSystemSpec {
  std::string family;  // "A".."D"; empty for an explicit system
  int rank = 0;
  std::size_t ambient_dim = 0;
  std::vector<Vector> roots;
  std::vector<std::size_t> simple_roots;  // 1-based positions in roots

  bool is_explicit() const { return family.empty(); }
  friend bool operator==(const RootSystemSpec&, const RootSystemSpec&) = default;
};

// An R-group generator: a matrix on a_M coordinates or a Weyl word acting
// on a_0 (which must preserve a_M).
struct GeneratorSpec {
  std::optional<std::vector<int>> word;
  Matrix matrix;
  friend bool operator==(const GeneratorSpec&, const GeneratorSpec&) = default;
};

struct ExtensionSpec {
  enum class Kind { split, mult_table, permutations, matrices };
  Kind kind = Kind::split;
  std::vector<std::vector<int>> mult_table;
  std::vector<std::vector<int>> permutations;
  std::vector<Matrix> matrices;
  // mult_table: element indices. Generated kinds: words in the total
  // generators (1-based, empty word = identity).
  std::vector<std::vector<int>> center;
  std::vector<Rational> chi;  // chi(center[i]) = exp(2 pi i chi[i])
  // mult_table only: the total element lifting each R generator. For the
  // generated kinds total generator k lifts R generator k.
  std::vector<int> lifts;
  friend bool operator==(const ExtensionSpec&, const ExtensionSpec&) = default;
};

struct BaseCharacter {
  std::size_t levi = 0;       // index into the Levi lattice
  std::size_t character = 0;  // index into the isotypic family of that Levi's preimage
  friend bool operator==(const BaseCharacter&, const BaseCharacter&) = default;
};

struct ScenarioDocument {
  std::string name;
  std::string description;
  RootSystemSpec root_system;
  std::vector<std::size_t> levi_subset;  // 1-based simple-root indices
  std::vector<std::size_t> delta_sigma;  // 0-based restricted-root indices
  std::vector<GeneratorSpec> generators;
  ExtensionSpec extension;
  LeviFamily levi_family = LeviFamily::arthur;
  std::vector<BaseCharacter> base_characters;
  friend bool operator==(const ScenarioDocument&, const ScenarioDocument&) = default;
};

// ---------------------------------------------------------------------------

struct Violation {
  std::string code;
  std::string message;
  std::string witness;
};

std::string to_string(const Violation& v);

struct Scenario {
  ScenarioDocument document;
  RootSystem root_system;
  LeviDescriptor levi_m;
  std::vector<Vector> restricted;   // restricted_roots(root_system, levi_m)
  std::vector<Vector> delta_sigma;  // covectors on a_M coordinates
  std::vector<LeviDescriptor> lattice;
  GroupPtr r_group;                 // linear_action(): matrices on a_M coordinates
  CentralExtension extension;
  std::vector<std::size_t> levi_of_element;  // R element -> lattice index
  bool non_reflection_elements = false;

  const std::string& name() const { return document.name; }
  LeviFamily default_family() const { return document.levi_family; }
  std::size_t levi_g() const { return lattice.size() - 1; }
  std::size_t levi_index_m() const { return 0; }
  std::size_t dim_a(std::size_t levi) const { return lattice[levi].dim_A(); }
  // Lattice index of the given split component, or -1.
  int levi_index(const Subspace& a) const;
};

struct ValidationResult {
  std::optional<Scenario> scenario;
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

// Builds a scenario from its document and checks every invariant: root
// system axioms, R acting faithfully, fixing a_G and permuting both the
// restricted roots and delta_sigma, the extension laws, fixed spaces that
// are Levi split components compatible with delta_sigma, conjugate
// elements with fixed spaces of equal dimension, and base-character
// designations in range.
ValidationResult validate_scenario(const ScenarioDocument& doc);

// validate_scenario, throwing ScenarioInconsistency that lists the
// violations.
Scenario build_scenario(const ScenarioDocument& doc);

// Fixed vectors of r (an R element) inside a_M, as a subspace of a_0.
Subspace fixed_space(const Scenario& s, int r);

// L_r. Throws ScenarioInconsistency if no Levi matches or L_r fails the
// compatibility condition.
const LeviDescriptor& levi_of(const Scenario& s, int r);
std::size_t levi_index_of(const Scenario& s, int r);

struct RegularSet {
  std::vector<int> elements;
  bool elliptic = false;
};
RegularSet regular_set(const Scenario& s);

struct RegularStratum {
  std::size_t levi = 0;  // lattice index
  std::vector<int> elements;
};
// Strata ordered by lattice index.
std::vector<RegularStratum> levi_support_partition(const Scenario& s);

// Elements of R fixing a_L pointwise; no family check.
std::vector<int> pointwise_stabilizer(const Scenario& s, std::size_t levi);

struct LeviSubgroup {
  std::size_t levi = 0;
  std::vector<int> r_elements;  // R^L inside R
  SubExtension preimage;        // R~^L over R^L
};
// Throws InvalidInput when levi is outside the active family.
LeviSubgroup subgroup_for_levi(const Scenario& s, std::size_t levi, LeviFamily family);
LeviSubgroup subgroup_for_levi(const Scenario& s, std::size_t levi);

// xi(r~) = (-1)^{dim A_{L_r}} on the total group.
ClassFunction sign_map(const Scenario& s);

// Lattice indices, ascending.
std::vector<std::size_t> active_levi_family(const Scenario& s, LeviFamily family);
std::vector<std::size_t> active_levi_family(const Scenario& s);

}  // namespace stdual
