#include "stdual/builtins.hpp"

#include <utility>

#include "stdual/errors.hpp"
#include "stdual/scenario_io.hpp"

namespace stdual {

namespace {

const std::vector<std::pair<std::string, std::string>>& library() {
  static const std::vector<std::pair<std::string, std::string>> docs{
      {"trivial-g", R"(name: trivial-g
description: M = G for a rank-one system on a line; R trivial.
root_system: {ambient_dim: 1, roots: [[1], [-1]], simple_roots: [1]}
levi_subset: [1]
delta_sigma: []
r_group: {generators: []}
extension: split
options: {levi_family: arthur}
)"},
      {"trivial-levi", R"(name: trivial-levi
description: Minimal Levi of a rank-one system on a line; R trivial.
root_system: {ambient_dim: 1, roots: [[1], [-1]], simple_roots: [1]}
levi_subset: []
delta_sigma: []
r_group: {generators: []}
extension: split
options: {levi_family: arthur}
)"},
      {"z2-corank1", R"(name: z2-corank1
description: Corank one, R = {1, s} with s acting by -1 on a_M; split.
root_system: {ambient_dim: 1, roots: [[1], [-1]], simple_roots: [1]}
levi_subset: []
delta_sigma: []
r_group:
  generators:
    - matrix: [[-1]]
extension: split
options: {levi_family: arthur}
)"},
      {"klein4", R"(name: klein4
description: B2 minimal Levi; R generated by the reflections in e1 and e2.
root_system: {family: B, rank: 2}
levi_subset: []
delta_sigma: []
r_group:
  generators:
    - word: [1, 2, 1]
    - word: [2]
extension: split
options: {levi_family: support}
)"},
      {"z4-rot", R"(name: z4-rot
description: B2 minimal Levi; R cyclic of order four generated by the rotation s1 s2.
root_system: {family: B, rank: 2}
levi_subset: []
delta_sigma: []
r_group:
  generators:
    - word: [1, 2]
extension: split
options: {levi_family: arthur}
)"},
      {"q8-klein", R"(name: q8-klein
description: The klein4 R-group covered by the quaternion group; chi(-1) = -1.
root_system: {family: B, rank: 2}
levi_subset: []
delta_sigma: []
r_group:
  generators:
    - word: [1, 2, 1]
    - word: [2]
extension:
  matrices:
    - [[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]]
    - [[0, 0, -1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, -1, 0, 0]]
  center: [[], [1, 1]]
  chi: [0, 1/2]
options: {levi_family: support}
)"},
      {"a2-full", R"(name: a2-full
description: A2 minimal Levi; R is the whole Weyl group. Euler sums fail on the full lattice.
root_system: {family: A, rank: 2}
levi_subset: []
delta_sigma: []
r_group:
  generators:
    - word: [1]
    - word: [2]
extension: split
options: {levi_family: all}
)"},
      {"b2-delta", R"(name: b2-delta
description: B2 minimal Levi with delta_sigma = {e1 - e2, e1 + e2}; R = {1, s_e2}.
root_system: {family: B, rank: 2}
levi_subset: []
delta_sigma: [0, 1]
r_group:
  generators:
    - word: [2]
extension: split
options: {levi_family: arthur}
)"},
  };
  return docs;
}

}  // namespace

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, doc] : library()) out.push_back(name);
    return out;
  }();
  return names;
}

const std::string& builtin_document(const std::string& name) {
  for (const auto& [n, doc] : library())
    if (n == name) return doc;
  std::string known;
  for (const auto& n : builtin_names()) known += (known.empty() ? "" : ", ") + n;
  throw InvalidInput("unknown builtin '" + name + "' (known: " + known + ")");
}

Scenario builtin(const std::string& name) { return parse_scenario(builtin_document(name), "builtin:" + name); }

std::vector<Scenario> builtin_library() {
  std::vector<Scenario> out;
  for (const auto& n : builtin_names()) out.push_back(builtin(n));
  return out;
}

}  // namespace stdual
