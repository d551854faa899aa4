#include "stdual/rgroup.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "closure.hpp"
#include "stdual/errors.hpp"

namespace stdual {

std::string to_string(LeviFamily f) {
  switch (f) {
    case LeviFamily::arthur: return "arthur";
    case LeviFamily::all: return "all";
    case LeviFamily::support: return "support";
  }
  return "?";
}

LeviFamily parse_levi_family(std::string_view name) {
  if (name == "arthur") return LeviFamily::arthur;
  if (name == "all") return LeviFamily::all;
  if (name == "support") return LeviFamily::support;
  throw InvalidInput("unknown Levi family '" + std::string(name) + "' (expected arthur, all or support)");
}

std::string to_string(const Violation& v) {
  std::string s = v.code + ": " + v.message;
  if (!v.witness.empty()) s += " [witness: " + v.witness + "]";
  return s;
}

int Scenario::levi_index(const Subspace& a) const {
  for (std::size_t i = 0; i < lattice.size(); ++i)
    if (lattice[i].split_component == a) return static_cast<int>(i);
  return -1;
}

namespace {

struct Generated {
  GroupPtr group;
  std::vector<int> generator_elements;
};

template <class Elem, class Mul, class Key>
Generated generate(const std::vector<Elem>& gens, const Elem& id, Mul mul, Key key,
                   std::optional<std::vector<Matrix>> (*action)(const std::vector<Elem>&)) {
  auto c = detail::close_under(gens, id, mul, key, kDefaultGroupCap, "g");
  Generated out;
  for (std::size_t k = 0; k < gens.size(); ++k) out.generator_elements.push_back(c.right[k]);
  auto table = c.table(gens.size());
  out.group = std::make_shared<const FiniteGroup>(
      FiniteGroup::from_generated(std::move(table), c.elements.size(), action(c.elements), c.labels));
  return out;
}

std::optional<std::vector<Matrix>> matrices_as_action(const std::vector<Matrix>& e) { return e; }
std::optional<std::vector<Matrix>> no_action(const std::vector<std::vector<int>>&) { return std::nullopt; }

Generated generate_matrices(const std::vector<Matrix>& gens, std::size_t dim) {
  return generate(
      gens, Matrix::identity(dim), [](const Matrix& a, const Matrix& b) { return a * b; },
      [](const Matrix& m) { return m.str(); }, &matrices_as_action);
}

// p first, then q.
Generated generate_permutations(const std::vector<std::vector<int>>& gens, std::size_t n) {
  std::vector<int> id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = static_cast<int>(i);
  return generate(
      gens, id,
      [](const std::vector<int>& p, const std::vector<int>& q) {
        std::vector<int> r(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[static_cast<std::size_t>(p[i])];
        return r;
      },
      [](const std::vector<int>& p) { return p; }, &no_action);
}

Vector act_on_covector(const Vector& c, const Matrix& inverse_action) { return left_multiply(c, inverse_action); }

std::string label_of(const FiniteGroup& g, int e) { return g.label(e); }

Subspace fixed_space_of(const Scenario& s, const Matrix& a) {
  const auto& am = s.levi_m.split_component;
  const std::size_t d = am.dim();
  Matrix diff = a - Matrix::identity(d);
  Matrix ker = nullspace(diff, d);
  std::vector<Vector> vs;
  for (std::size_t r = 0; r < ker.rows(); ++r) vs.push_back(am.from_coordinates(ker.row(r)));
  return Subspace::span(vs, s.root_system.ambient_dim);
}

class Validator {
 public:
  explicit Validator(const ScenarioDocument& doc) : doc_(doc) { s_.document = doc; }

  ValidationResult run() {
    ValidationResult out;
    if (build_geometry() && build_r_group() && check_action() && build_extension() && check_levis())
      check_base_characters();
    out.violations = std::move(violations_);
    if (out.violations.empty()) out.scenario = std::move(s_);
    return out;
  }

 private:
  void fail(std::string code, std::string message, std::string witness = {}) {
    violations_.push_back(Violation{std::move(code), std::move(message), std::move(witness)});
  }

  bool build_geometry() {
    const auto& rs = doc_.root_system;
    try {
      if (rs.is_explicit()) {
        std::vector<std::size_t> simple;
        for (auto k : rs.simple_roots) {
          if (k < 1 || k > rs.roots.size()) {
            fail("root-system", "simple root position out of range", std::to_string(k));
            return false;
          }
          simple.push_back(k - 1);
        }
        s_.root_system = explicit_root_system(rs.ambient_dim, rs.roots, simple);
      } else {
        if (rs.family.size() != 1) {
          fail("root-system", "family must be one of A, B, C, D", rs.family);
          return false;
        }
        s_.root_system = build_root_system(rs.family[0], rs.rank);
      }
    } catch (const InvalidInput& e) {
      fail("root-system", e.what());
      return false;
    }
    std::vector<std::size_t> subset;
    for (auto k : doc_.levi_subset) {
      if (k < 1 || k > s_.root_system.rank()) {
        fail("levi-subset", "simple root index out of range", std::to_string(k));
        return false;
      }
      subset.push_back(k - 1);
    }
    s_.levi_m = levi_from_subset(s_.root_system, subset);
    s_.restricted = restricted_roots(s_.root_system, s_.levi_m);
    std::set<std::size_t> seen;
    for (auto k : doc_.delta_sigma) {
      if (k >= s_.restricted.size()) {
        fail("delta-sigma", "restricted root index out of range (" + std::to_string(s_.restricted.size()) + " restricted roots)",
             std::to_string(k));
        return false;
      }
      if (!seen.insert(k).second) {
        fail("delta-sigma", "restricted root listed twice", std::to_string(k));
        return false;
      }
      s_.delta_sigma.push_back(s_.restricted[k]);
    }
    s_.lattice = levi_lattice(s_.root_system, s_.levi_m);
    return true;
  }

  bool build_r_group() {
    const auto& am = s_.levi_m.split_component;
    const std::size_t d = am.dim();
    std::vector<Matrix> gens;
    for (std::size_t g = 0; g < doc_.generators.size(); ++g) {
      const auto& spec = doc_.generators[g];
      const std::string where = "generator " + std::to_string(g + 1);
      if (spec.word) {
        Matrix w = Matrix::identity(s_.root_system.ambient_dim);
        for (int letter : *spec.word) {
          if (letter < 1 || static_cast<std::size_t>(letter) > s_.root_system.rank()) {
            fail("r-group", where + " uses a simple reflection out of range", std::to_string(letter));
            return false;
          }
          w = w * s_.root_system.reflection(s_.root_system.simple_roots[static_cast<std::size_t>(letter - 1)]);
        }
        Matrix a(d, d);
        for (std::size_t k = 0; k < d; ++k) {
          Vector image = w * am.basis().row(k);
          if (!am.contains(image)) {
            fail("r-group", where + " does not preserve a_M", to_string(am.basis().row(k)));
            return false;
          }
          Vector c = am.coordinates(image);
          for (std::size_t i = 0; i < d; ++i) a(i, k) = c[i];
        }
        gens.push_back(std::move(a));
      } else {
        if (spec.matrix.rows() != d || spec.matrix.cols() != d) {
          fail("r-group", where + " must be a " + std::to_string(d) + "x" + std::to_string(d) + " matrix on a_M",
               spec.matrix.str());
          return false;
        }
        if (!inverse(spec.matrix)) {
          fail("r-group", where + " is not invertible", spec.matrix.str());
          return false;
        }
        gens.push_back(spec.matrix);
      }
    }
    r_generators_ = gens;
    try {
      auto gen = generate_matrices(gens.empty() ? std::vector<Matrix>{Matrix::identity(d)} : gens, d);
      s_.r_group = gen.group;
      r_generator_elements_ = gens.empty() ? std::vector<int>{} : gen.generator_elements;
    } catch (const ResourceLimit& e) {
      fail("r-group", e.what());
      return false;
    }
    return true;
  }

  bool check_action() {
    const auto& r = *s_.r_group;
    const auto& am = s_.levi_m.split_component;
    const auto& ag = s_.lattice.back().split_component;
    std::vector<Vector> ag_coords;
    for (std::size_t k = 0; k < ag.dim(); ++k) ag_coords.push_back(am.coordinates(ag.basis().row(k)));
    std::set<Vector> restricted(s_.restricted.begin(), s_.restricted.end());
    std::set<Vector> delta(s_.delta_sigma.begin(), s_.delta_sigma.end());
    bool ok = true;
    for (std::size_t e = 0; e < r.order(); ++e) {
      const Matrix& a = (*r.linear_action())[e];
      const Matrix ainv = *inverse(a);
      const std::string who = label_of(r, static_cast<int>(e));
      for (const auto& v : ag_coords)
        if (a * v != v) {
          fail("r-action", "element " + who + " moves a vector of a_G", to_string(am.from_coordinates(v)));
          ok = false;
        }
      for (const auto& c : s_.restricted)
        if (!restricted.count(reduce_covector(act_on_covector(c, ainv)))) {
          fail("r-action", "element " + who + " maps a restricted root outside the restricted roots", to_string(c));
          ok = false;
        }
      std::set<Vector> image;
      for (const auto& c : s_.delta_sigma) image.insert(reduce_covector(act_on_covector(c, ainv)));
      if (image != delta) {
        std::string w;
        for (const auto& c : s_.delta_sigma)
          if (!delta.count(reduce_covector(act_on_covector(c, ainv)))) {
            w = to_string(c);
            break;
          }
        fail("delta-stability", "element " + who + " does not preserve delta_sigma", w);
        ok = false;
      }
      if (!ok) break;
    }
    return ok;
  }

  bool build_extension() {
    const auto& spec = doc_.extension;
    using Kind = ExtensionSpec::Kind;
    if (spec.kind == Kind::split) {
      s_.extension = CentralExtension::split(s_.r_group);
      return true;
    }
    GroupPtr total;
    std::vector<int> lift_elements;
    std::vector<int> center;
    try {
      if (spec.kind == Kind::mult_table) {
        total = std::make_shared<const FiniteGroup>(FiniteGroup::from_table(spec.mult_table));
        for (const auto& c : spec.center) {
          if (c.size() != 1 || c[0] < 0 || static_cast<std::size_t>(c[0]) >= total->order()) {
            fail("extension", "center entries must be element indices of the table");
            return false;
          }
          center.push_back(c[0]);
        }
        if (spec.lifts.size() != r_generators_.size()) {
          fail("extension", "lifts must list one total element per R generator",
               std::to_string(spec.lifts.size()) + " lifts, " + std::to_string(r_generators_.size()) + " generators");
          return false;
        }
        for (int l : spec.lifts) {
          if (l < 0 || static_cast<std::size_t>(l) >= total->order()) {
            fail("extension", "lift out of range", std::to_string(l));
            return false;
          }
          lift_elements.push_back(l);
        }
      } else {
        Generated gen;
        if (spec.kind == Kind::permutations) {
          if (spec.permutations.empty()) {
            fail("extension", "permutation extension needs generators");
            return false;
          }
          const std::size_t n = spec.permutations.front().size();
          for (const auto& p : spec.permutations) {
            std::vector<int> sorted = p;
            std::sort(sorted.begin(), sorted.end());
            bool perm = p.size() == n;
            for (std::size_t i = 0; perm && i < n; ++i) perm = sorted[i] == static_cast<int>(i);
            if (!perm) {
              fail("extension", "generator is not a permutation of 0.." + std::to_string(n - 1));
              return false;
            }
          }
          gen = generate_permutations(spec.permutations, n);
        } else {
          if (spec.matrices.empty()) {
            fail("extension", "matrix extension needs generators");
            return false;
          }
          const std::size_t n = spec.matrices.front().rows();
          for (const auto& m : spec.matrices)
            if (!m.square() || m.rows() != n || !inverse(m)) {
              fail("extension", "matrix generators must be invertible of one size", m.str());
              return false;
            }
          gen = generate_matrices(spec.matrices, n);
        }
        total = gen.group;
        if (gen.generator_elements.size() < r_generators_.size()) {
          fail("extension", "fewer total generators than R generators");
          return false;
        }
        lift_elements = gen.generator_elements;
        for (const auto& word : spec.center) {
          int e = total->identity();
          for (int letter : word) {
            if (letter < 1 || static_cast<std::size_t>(letter) > gen.generator_elements.size()) {
              fail("extension", "center word uses an unknown generator", std::to_string(letter));
              return false;
            }
            e = total->mul(e, gen.generator_elements[static_cast<std::size_t>(letter - 1)]);
          }
          center.push_back(e);
        }
      }
    } catch (const Error& e) {
      fail("extension", e.what());
      return false;
    }
    if (spec.chi.size() != center.size()) {
      fail("extension", "chi must list one exponent per center element");
      return false;
    }
    {
      std::set<int> distinct(center.begin(), center.end());
      if (distinct.size() != center.size()) {
        fail("extension", "center lists an element twice");
        return false;
      }
    }
    // Projection from lifts and center, by breadth-first search.
    const auto& r = *s_.r_group;
    std::vector<int> images;
    for (std::size_t k = 0; k < lift_elements.size(); ++k)
      images.push_back(k < r_generator_elements_.size() ? r_generator_elements_[k] : r.identity());
    std::vector<int> proj(total->order(), -1);
    proj[static_cast<std::size_t>(total->identity())] = r.identity();
    std::vector<int> queue{total->identity()};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const int x = queue[i];
      auto visit = [&](int y, int py) {
        auto& slot = proj[static_cast<std::size_t>(y)];
        if (slot < 0) {
          slot = py;
          queue.push_back(y);
        } else if (slot != py) {
          fail("extension", "lifts do not define a homomorphism onto R", total->label(y));
          return false;
        }
        return true;
      };
      for (std::size_t k = 0; k < lift_elements.size(); ++k)
        if (!visit(total->mul(x, lift_elements[k]), r.mul(proj[static_cast<std::size_t>(x)], images[k]))) return false;
      for (int z : center)
        if (!visit(total->mul(x, z), proj[static_cast<std::size_t>(x)])) return false;
    }
    if (queue.size() != total->order()) {
      fail("extension", "lifts and center do not generate the total group");
      return false;
    }
    CentralExtension ext;
    ext.total = total;
    ext.quotient = s_.r_group;
    ext.projection = std::move(proj);
    ext.center = center;
    for (const auto& q : spec.chi) ext.chi.push_back(Cyclotomic::root_of_unity(q));
    // Keep center and chi sorted by element index.
    std::vector<std::size_t> order(center.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return center[a] < center[b]; });
    CentralExtension sorted = ext;
    for (std::size_t i = 0; i < order.size(); ++i) {
      sorted.center[i] = ext.center[order[i]];
      sorted.chi[i] = ext.chi[order[i]];
    }
    auto problems = sorted.violations();
    for (auto& p : problems) fail("extension", p);
    if (!problems.empty()) return false;
    s_.extension = std::move(sorted);
    return true;
  }

  bool check_levis() {
    const auto& r = *s_.r_group;
    bool ok = true;
    for (std::size_t e = 0; e < r.order(); ++e) {
      const Matrix& a = (*r.linear_action())[e];
      Subspace fixed = fixed_space_of(s_, a);
      int idx = s_.levi_index(fixed);
      if (idx < 0) {
        fail("fixed-space", "fixed space of " + r.label(static_cast<int>(e)) + " is not a Levi split component",
             fixed.str());
        ok = false;
        s_.levi_of_element.push_back(0);
        continue;
      }
      s_.levi_of_element.push_back(static_cast<std::size_t>(idx));
      if (!arthur_compatible(s_.root_system, s_.levi_m, s_.delta_sigma, s_.lattice[static_cast<std::size_t>(idx)])) {
        fail("levi-compatibility", "L_r of " + r.label(static_cast<int>(e)) + " fails the cone condition",
             fixed.str());
        ok = false;
      }
      const std::size_t codim = s_.levi_m.dim_A() - fixed.dim();
      if (static_cast<int>(e) != r.identity() && !(codim == 1 && r.mul(static_cast<int>(e), static_cast<int>(e)) == r.identity()))
        s_.non_reflection_elements = true;
    }
    if (!ok) return false;
    const auto& t = *s_.extension.total;
    for (std::size_t c = 0; c < t.num_classes(); ++c) {
      const auto& members = t.class_members(c);
      const auto dim0 = s_.dim_a(s_.levi_of_element[static_cast<std::size_t>(s_.extension.projection[static_cast<std::size_t>(members[0])])]);
      for (int m : members)
        if (s_.dim_a(s_.levi_of_element[static_cast<std::size_t>(s_.extension.projection[static_cast<std::size_t>(m)])]) != dim0) {
          fail("sign-class", "conjugate elements have fixed spaces of different dimension", t.label(m));
          return false;
        }
    }
    return true;
  }

  void check_base_characters() {
    std::set<std::size_t> seen;
    for (const auto& b : doc_.base_characters) {
      if (b.levi >= s_.lattice.size()) {
        fail("base-characters", "Levi index out of range", std::to_string(b.levi));
        continue;
      }
      if (!seen.insert(b.levi).second) {
        fail("base-characters", "Levi designated twice", std::to_string(b.levi));
        continue;
      }
      auto sub = sub_extension(s_.extension, pointwise_stabilizer(s_, b.levi));
      auto fam = chi_isotypic(sub.ext);
      if (b.character >= fam.size())
        fail("base-characters",
             "character index out of range (" + std::to_string(fam.size()) + " isotypic characters)",
             std::to_string(b.levi) + ":" + std::to_string(b.character));
    }
  }

  const ScenarioDocument& doc_;
  Scenario s_;
  std::vector<Matrix> r_generators_;
  std::vector<int> r_generator_elements_;
  std::vector<Violation> violations_;
};

}  // namespace

ValidationResult validate_scenario(const ScenarioDocument& doc) { return Validator(doc).run(); }

Scenario build_scenario(const ScenarioDocument& doc) {
  auto result = validate_scenario(doc);
  if (!result.ok()) {
    std::string msg = "scenario '" + doc.name + "' is invalid:";
    for (const auto& v : result.violations) msg += "\n  " + to_string(v);
    throw ScenarioInconsistency(msg);
  }
  return std::move(*result.scenario);
}

Subspace fixed_space(const Scenario& s, int r) {
  return fixed_space_of(s, (*s.r_group->linear_action())[static_cast<std::size_t>(r)]);
}

std::size_t levi_index_of(const Scenario& s, int r) {
  Subspace fixed = fixed_space(s, r);
  int idx = s.levi_index(fixed);
  if (idx < 0) throw ScenarioInconsistency("no Levi has split component " + fixed.str());
  const auto& l = s.lattice[static_cast<std::size_t>(idx)];
  if (!arthur_compatible(s.root_system, s.levi_m, s.delta_sigma, l))
    throw ScenarioInconsistency("L_r with split component " + fixed.str() + " fails the cone condition");
  return static_cast<std::size_t>(idx);
}

const LeviDescriptor& levi_of(const Scenario& s, int r) { return s.lattice[levi_index_of(s, r)]; }

RegularSet regular_set(const Scenario& s) {
  RegularSet out;
  for (std::size_t e = 0; e < s.r_group->order(); ++e)
    if (s.levi_of_element[e] == s.levi_g()) out.elements.push_back(static_cast<int>(e));
  out.elliptic = !out.elements.empty();
  return out;
}

std::vector<RegularStratum> levi_support_partition(const Scenario& s) {
  std::map<std::size_t, std::vector<int>> strata;
  for (std::size_t e = 0; e < s.r_group->order(); ++e) strata[s.levi_of_element[e]].push_back(static_cast<int>(e));
  std::vector<RegularStratum> out;
  for (auto& [levi, elements] : strata) out.push_back(RegularStratum{levi, std::move(elements)});
  return out;
}

std::vector<int> pointwise_stabilizer(const Scenario& s, std::size_t levi) {
  const auto& am = s.levi_m.split_component;
  const auto& al = s.lattice.at(levi).split_component;
  std::vector<Vector> coords;
  for (std::size_t k = 0; k < al.dim(); ++k) coords.push_back(am.coordinates(al.basis().row(k)));
  std::vector<int> out;
  for (std::size_t e = 0; e < s.r_group->order(); ++e) {
    const Matrix& a = (*s.r_group->linear_action())[e];
    if (std::all_of(coords.begin(), coords.end(), [&](const Vector& v) { return a * v == v; }))
      out.push_back(static_cast<int>(e));
  }
  return out;
}

LeviSubgroup subgroup_for_levi(const Scenario& s, std::size_t levi, LeviFamily family) {
  auto fam = active_levi_family(s, family);
  if (std::find(fam.begin(), fam.end(), levi) == fam.end())
    throw InvalidInput("Levi " + std::to_string(levi) + " is not in the " + to_string(family) + " family");
  auto elements = pointwise_stabilizer(s, levi);
  auto sub = sub_extension(s.extension, elements);
  return LeviSubgroup{levi, std::move(elements), std::move(sub)};
}

LeviSubgroup subgroup_for_levi(const Scenario& s, std::size_t levi) {
  return subgroup_for_levi(s, levi, s.default_family());
}

ClassFunction sign_map(const Scenario& s) {
  const auto& t = s.extension.total;
  std::vector<Cyclotomic> values;
  for (std::size_t c = 0; c < t->num_classes(); ++c) {
    const int q = s.extension.projection[static_cast<std::size_t>(t->class_rep(c))];
    values.push_back(s.dim_a(s.levi_of_element[static_cast<std::size_t>(q)]) % 2 == 0 ? 1 : -1);
  }
  return ClassFunction(t, std::move(values));
}

std::vector<std::size_t> active_levi_family(const Scenario& s, LeviFamily family) {
  std::vector<std::size_t> out;
  switch (family) {
    case LeviFamily::all:
      for (std::size_t i = 0; i < s.lattice.size(); ++i) out.push_back(i);
      break;
    case LeviFamily::arthur:
      for (std::size_t i = 0; i < s.lattice.size(); ++i)
        if (arthur_compatible(s.root_system, s.levi_m, s.delta_sigma, s.lattice[i])) out.push_back(i);
      break;
    case LeviFamily::support: {
      std::set<std::size_t> seen(s.levi_of_element.begin(), s.levi_of_element.end());
      out.assign(seen.begin(), seen.end());
      break;
    }
  }
  return out;
}

std::vector<std::size_t> active_levi_family(const Scenario& s) { return active_levi_family(s, s.default_family()); }

}  // namespace stdual
