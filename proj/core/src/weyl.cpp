#include "stdual/weyl.hpp"

#include <algorithm>

#include "closure.hpp"
#include "stdual/errors.hpp"

namespace stdual {

namespace {

struct Elem {
  std::vector<int> perm;
  Matrix matrix;
};

const std::vector<std::size_t>& require_subset(const LeviDescriptor& l, const char* what) {
  if (!l.subset) throw InvalidInput(std::string(what) + " is not a standard Levi");
  return *l.subset;
}

}  // namespace

int WeylGroup::index_of(const Matrix& m) const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i].matrix == m) return static_cast<int>(i);
  return -1;
}

WeylGroup weyl_group(const RootSystem& rs, std::size_t cap) {
  const std::size_t nroots = rs.roots.size();
  std::vector<Elem> gens;
  for (std::size_t k = 0; k < rs.rank(); ++k) {
    Elem e{std::vector<int>(nroots), rs.reflection(rs.simple_roots[k])};
    for (std::size_t j = 0; j < nroots; ++j) e.perm[j] = rs.index_of(e.matrix * rs.roots[j]);
    gens.push_back(std::move(e));
  }
  Elem id{std::vector<int>(nroots), Matrix::identity(rs.ambient_dim)};
  for (std::size_t j = 0; j < nroots; ++j) id.perm[j] = static_cast<int>(j);
  auto mul = [](const Elem& a, const Elem& b) {
    Elem c{std::vector<int>(a.perm.size()), a.matrix * b.matrix};
    for (std::size_t j = 0; j < a.perm.size(); ++j) c.perm[j] = a.perm[static_cast<std::size_t>(b.perm[j])];
    return c;
  };
  auto closure = detail::close_under(gens, id, mul, [](const Elem& e) { return e.perm; }, cap, "s");

  WeylGroup w;
  w.roots = rs;
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < closure.elements.size(); ++i) {
    WeylElement we;
    we.matrix = closure.elements[i].matrix;
    we.permutation = closure.elements[i].perm;
    if (i > 0) {
      we.word = w.elements[static_cast<std::size_t>(closure.parent[i])].word;
      we.word.push_back(closure.via[i]);
    }
    action.push_back(we.matrix);
    w.elements.push_back(std::move(we));
  }
  w.group = std::make_shared<const FiniteGroup>(FiniteGroup::from_generated(
      closure.table(gens.size()), closure.elements.size(), std::move(action), closure.labels));
  return w;
}

std::vector<std::size_t> parabolic_positive_roots(const RootSystem& rs, const std::vector<std::size_t>& subset) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < rs.roots.size(); ++j) {
    if (!rs.is_positive(j)) continue;
    bool inside = true;
    for (std::size_t k = 0; k < rs.rank() && inside; ++k)
      if (rs.simple_coordinates[j][k] != 0 && std::find(subset.begin(), subset.end(), k) == subset.end()) inside = false;
    if (inside) out.push_back(j);
  }
  return out;
}

std::vector<int> parabolic_subgroup(const WeylGroup& w, const std::vector<std::size_t>& subset) {
  std::vector<int> gens;
  for (auto k : subset) {
    if (k >= w.roots.rank()) throw InvalidInput("simple reflection index out of range");
    gens.push_back(w.index_of(w.roots.reflection(w.roots.simple_roots[k])));
  }
  return generated_subgroup(*w.group, gens);
}

std::vector<int> coset_representative_indices(const WeylGroup& w, const LeviDescriptor& m, const LeviDescriptor& l) {
  const auto pos_m = parabolic_positive_roots(w.roots, require_subset(m, "M"));
  const auto pos_l = parabolic_positive_roots(w.roots, require_subset(l, "L"));
  std::vector<int> out;
  for (std::size_t i = 0; i < w.order(); ++i) {
    const auto& perm = w.elements[i].permutation;
    const auto& inv = w.elements[static_cast<std::size_t>(w.group->inv(static_cast<int>(i)))].permutation;
    bool ok = true;
    for (auto j : pos_m) ok = ok && w.roots.is_positive(static_cast<std::size_t>(perm[j]));
    for (auto j : pos_l) ok = ok && w.roots.is_positive(static_cast<std::size_t>(inv[j]));
    if (ok) out.push_back(static_cast<int>(i));
  }
  return out;
}

std::vector<WeylElement> coset_representatives(const RootSystem& rs, const LeviDescriptor& m, const LeviDescriptor& l) {
  WeylGroup w = weyl_group(rs);
  std::vector<WeylElement> out;
  for (int i : coset_representative_indices(w, m, l)) out.push_back(w.elements[static_cast<std::size_t>(i)]);
  return out;
}

bool double_cosets_partition(const WeylGroup& w, const LeviDescriptor& m, const LeviDescriptor& l,
                             std::string* witness) {
  const auto wm = parabolic_subgroup(w, require_subset(m, "M"));
  const auto wl = parabolic_subgroup(w, require_subset(l, "L"));
  std::vector<int> owner(w.order(), -1);
  for (int rep : coset_representative_indices(w, m, l)) {
    std::vector<char> in_coset(w.order(), 0);
    for (int a : wl)
      for (int b : wm) in_coset[static_cast<std::size_t>(w.group->mul(w.group->mul(a, rep), b))] = 1;
    for (std::size_t x = 0; x < w.order(); ++x) {
      if (!in_coset[x]) continue;
      if (owner[x] >= 0) {
        if (witness)
          *witness = "element " + w.group->label(static_cast<int>(x)) + " lies in the double cosets of " +
                     w.group->label(owner[x]) + " and " + w.group->label(rep);
        return false;
      }
      owner[x] = rep;
    }
  }
  for (std::size_t x = 0; x < w.order(); ++x)
    if (owner[x] < 0) {
      if (witness) *witness = "element " + w.group->label(static_cast<int>(x)) + " lies in no double coset";
      return false;
    }
  return true;
}

std::string word_string(const std::vector<int>& word) {
  if (word.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < word.size(); ++i) s += (i ? "." : "") + std::string("s") + std::to_string(word[i] + 1);
  return s;
}

}  // namespace stdual
