#include "stdual/duality.hpp"

#include <algorithm>
#include <sstream>

#include "stdual/errors.hpp"

namespace stdual {

bool OperatorMatrix::is_identity() const {
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j)
      if (entries[i][j] != Cyclotomic(i == j ? 1 : 0)) return false;
  return true;
}

OperatorMatrix OperatorMatrix::operator*(const OperatorMatrix& rhs) const {
  if (size() != rhs.size()) throw InvalidInput("operator size mismatch");
  OperatorMatrix out{basis, std::vector<std::vector<Cyclotomic>>(size(), std::vector<Cyclotomic>(size()))};
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t k = 0; k < size(); ++k) {
      if (entries[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < size(); ++j) out.entries[i][j] += entries[i][k] * rhs.entries[k][j];
    }
  return out;
}

std::string OperatorMatrix::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < size(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < size(); ++j) os << (j ? ", " : "") << entries[i][j].str();
    os << ']';
  }
  os << ']';
  return os.str();
}

DualityEngine::DualityEngine(const Scenario& s, LeviFamily family)
    : s_(&s), policy_(family), family_(active_levi_family(s, family)), levels_(s.lattice.size()) {
  std::vector<std::size_t> wanted = family_;
  wanted.push_back(s.levi_g());
  const auto& total = s.extension.total;
  for (std::size_t l : wanted) {
    if (levels_[l]) continue;
    Level lv;
    lv.levi = l;
    if (l == s.levi_g()) {
      lv.group = total;
      lv.ext = s.extension;
      for (std::size_t e = 0; e < total->order(); ++e) {
        lv.embedding.push_back(static_cast<int>(e));
        lv.local.push_back(static_cast<int>(e));
      }
    } else {
      auto sub = sub_extension(s.extension, pointwise_stabilizer(s, l));
      lv.group = sub.total_sub.group;
      lv.embedding = sub.total_sub.embedding;
      lv.local = sub.total_sub.index_in_subgroup;
      lv.ext = std::move(sub.ext);
    }
    lv.family = chi_isotypic(lv.ext);
    levels_[l] = std::move(lv);
  }
}

bool DualityEngine::in_family(std::size_t levi) const {
  return std::find(family_.begin(), family_.end(), levi) != family_.end();
}

const Level& DualityEngine::level(std::size_t levi) const {
  if (levi >= levels_.size() || !levels_[levi])
    throw InvalidInput("Levi " + std::to_string(levi) + " is neither G nor in the " + to_string(policy_) + " family");
  return *levels_[levi];
}

Subgroup DualityEngine::inclusion(std::size_t inner, std::size_t outer) const {
  const auto& a_in = s_->lattice[inner].split_component;
  const auto& a_out = s_->lattice[outer].split_component;
  if (!a_in.contains(a_out))
    throw InvalidInput("Levi " + std::to_string(inner) + " is not contained in Levi " + std::to_string(outer));
  const Level& lin = level(inner);
  const Level& lout = level(outer);
  Subgroup h;
  h.parent = lout.group;
  h.group = lin.group;
  h.index_in_subgroup.assign(lout.group->order(), -1);
  for (std::size_t i = 0; i < lin.embedding.size(); ++i) {
    int e = lout.local[static_cast<std::size_t>(lin.embedding[i])];
    h.embedding.push_back(e);
    h.index_in_subgroup[static_cast<std::size_t>(e)] = static_cast<int>(i);
  }
  return h;
}

ClassFunction DualityEngine::dual(std::size_t t, const ClassFunction& f) const {
  const Level& lt = level(t);
  if (f.group() != lt.group) throw InvalidInput("class function is not on the requested level");
  const auto& at = s_->lattice[t].split_component;
  ClassFunction out = ClassFunction::zero(lt.group);
  for (std::size_t k : family_) {
    if (!s_->lattice[k].split_component.contains(at)) continue;
    const Cyclotomic sign(s_->dim_a(k) % 2 == 0 ? 1 : -1);
    if (k == t) {
      out += sign * f;
      continue;
    }
    Subgroup h = inclusion(k, t);
    out += sign * induce(restrict(f, h), h);
  }
  return out;
}

OperatorMatrix DualityEngine::matrix(std::size_t t) const {
  const Level& lt = level(t);
  const auto& fam = lt.family;
  OperatorMatrix m;
  m.basis = fam.characters();
  const std::size_t n = fam.size();
  m.entries.assign(n, std::vector<Cyclotomic>(n));
  for (std::size_t j = 0; j < n; ++j) {
    auto coeffs = decompose(dual(t, fam.at(j)), fam.table);
    for (std::size_t c = 0; c < coeffs.size(); ++c) {
      auto it = std::find(fam.members.begin(), fam.members.end(), c);
      if (it == fam.members.end()) {
        if (!coeffs[c].is_zero())
          throw Error("duality leaves the isotypic span: irreducible " + std::to_string(c) + " appears in D(" +
                      fam.at(j).str() + ")");
        continue;
      }
      m.entries[static_cast<std::size_t>(it - fam.members.begin())][j] = coeffs[c];
    }
  }
  return m;
}

ClassFunction DualityEngine::base(std::size_t levi) const {
  const Level& l = level(levi);
  for (const auto& b : s_->document.base_characters)
    if (b.levi == levi) {
      if (b.character >= l.family.size()) throw ConfigurationError("base character index out of range");
      return l.family.at(b.character);
    }
  if (l.ext.chi_trivial()) return ClassFunction::trivial(l.group);
  throw ConfigurationError("no base character for Levi " + std::to_string(levi) +
                           ": the central character is nontrivial and none is designated");
}

ClassFunction DualityEngine::steinberg(std::size_t t) const {
  const Level& lt = level(t);
  const auto& at = s_->lattice[t].split_component;
  ClassFunction out = ClassFunction::zero(lt.group);
  for (std::size_t k : family_) {
    if (!s_->lattice[k].split_component.contains(at)) continue;
    const Cyclotomic sign(s_->dim_a(k) % 2 == 0 ? 1 : -1);
    if (k == t) {
      out += sign * base(k);
      continue;
    }
    out += sign * induce(base(k), inclusion(k, t));
  }
  return out;
}

ClassFunction DualityEngine::project(std::size_t t, const ClassFunction& f) const {
  const auto& fam = level(t).family;
  auto coeffs = decompose(f, fam.table);
  for (std::size_t c = 0; c < coeffs.size(); ++c)
    if (std::find(fam.members.begin(), fam.members.end(), c) == fam.members.end()) coeffs[c] = Cyclotomic();
  return combine(coeffs, fam.table);
}

long DualityEngine::euler(std::size_t k) const {
  const auto& ak = s_->lattice[k].split_component;
  long sum = 0;
  for (std::size_t l : family_)
    if (ak.contains(s_->lattice[l].split_component)) sum += (s_->dim_a(k) - s_->dim_a(l)) % 2 == 0 ? 1 : -1;
  return sum;
}

OperatorMatrix duality_operator(const Scenario& s, LeviFamily family) { return DualityEngine(s, family).matrix(); }
OperatorMatrix duality_operator(const Scenario& s) { return duality_operator(s, s.default_family()); }

ClassFunction steinberg(const Scenario& s, LeviFamily family) { return DualityEngine(s, family).steinberg(); }
ClassFunction steinberg(const Scenario& s) { return steinberg(s, s.default_family()); }

bool is_elliptic_character(const Scenario& s, const ClassFunction& theta) {
  if (theta.group() != s.extension.total) throw InvalidInput("class function is not on the total group");
  for (int t : s.extension.preimage(regular_set(s).elements))
    if (!theta(t).is_zero()) return true;
  return false;
}

long euler_check(const Scenario& s, std::size_t k, LeviFamily family) {
  DualityEngine engine(s, family);
  if (!engine.in_family(k)) throw InvalidInput("Levi " + std::to_string(k) + " is not in the " + to_string(family) + " family");
  return engine.euler(k);
}

long euler_check(const Scenario& s, std::size_t k) { return euler_check(s, k, s.default_family()); }

}  // namespace stdual
