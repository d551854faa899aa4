#include "stdual/chartheory.hpp"

#include <algorithm>
#include <sstream>

#include "modular.hpp"
#include "stdual/errors.hpp"

namespace stdual {

ClassFunction::ClassFunction(GroupPtr group, std::vector<Cyclotomic> class_values)
    : group_(std::move(group)), values_(std::move(class_values)) {
  if (!group_) throw InvalidInput("class function needs a group");
  if (values_.size() != group_->num_classes())
    throw InvalidInput("class function has " + std::to_string(values_.size()) + " values for " +
                       std::to_string(group_->num_classes()) + " classes");
}

ClassFunction ClassFunction::zero(const GroupPtr& group) {
  return ClassFunction(group, std::vector<Cyclotomic>(group->num_classes()));
}

ClassFunction ClassFunction::trivial(const GroupPtr& group) {
  return ClassFunction(group, std::vector<Cyclotomic>(group->num_classes(), Cyclotomic(1)));
}

ClassFunction ClassFunction::from_elements(const GroupPtr& group, const std::vector<Cyclotomic>& element_values) {
  if (element_values.size() != group->order()) throw InvalidInput("need one value per element");
  std::vector<Cyclotomic> vals(group->num_classes());
  for (std::size_t c = 0; c < group->num_classes(); ++c) {
    vals[c] = element_values[static_cast<std::size_t>(group->class_rep(c))];
    for (int g : group->class_members(c))
      if (element_values[static_cast<std::size_t>(g)] != vals[c])
        throw InvalidInput("values are not constant on the class of element " + std::to_string(group->class_rep(c)));
  }
  return ClassFunction(group, std::move(vals));
}

bool ClassFunction::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const Cyclotomic& v) { return v.is_zero(); });
}

void ClassFunction::require_same_group(const ClassFunction& o) const {
  if (group_ != o.group_) throw InvalidInput("class functions live on different groups");
}

ClassFunction ClassFunction::operator-() const {
  ClassFunction out = *this;
  for (auto& v : out.values_) v = -v;
  return out;
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
  require_same_group(o);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& o) {
  require_same_group(o);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator*=(const Cyclotomic& s) {
  for (auto& v : values_) v *= s;
  return *this;
}

bool operator==(const ClassFunction& a, const ClassFunction& b) {
  return a.group_ == b.group_ && a.values_ == b.values_;
}

std::string ClassFunction::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < values_.size(); ++i) os << (i ? ", " : "") << values_[i].str();
  os << ')';
  return os.str();
}

int CharacterTable::index_of(const ClassFunction& chi) const {
  for (std::size_t i = 0; i < irreducibles.size(); ++i)
    if (irreducibles[i] == chi) return static_cast<int>(i);
  return -1;
}

ConjugacyClasses conjugacy_classes(const FiniteGroup& g) {
  ConjugacyClasses out;
  for (std::size_t c = 0; c < g.num_classes(); ++c) {
    out.representatives.push_back(g.class_rep(c));
    out.sizes.push_back(g.class_size(c));
  }
  for (std::size_t e = 0; e < g.order(); ++e) out.class_of.push_back(g.class_of(static_cast<int>(e)));
  return out;
}

CharacterTable character_table(const GroupPtr& g) {
  if (g->order() > kCharacterTableCap)
    throw ResourceLimit("group of order " + std::to_string(g->order()) + " exceeds character table cap " +
                        std::to_string(kCharacterTableCap));
  if (g->exponent() > kExponentCap)
    throw ResourceLimit("group exponent " + std::to_string(g->exponent()) + " exceeds conductor cap " +
                        std::to_string(kExponentCap));
  const auto mod = detail::modular_character_table(*g);
  const std::uint64_t p = mod.p;
  const int e = g->exponent();
  const std::size_t k = g->num_classes();

  CharacterTable table{g, {}};
  for (std::size_t x = 0; x < mod.values.size(); ++x) {
    const auto& chi = mod.values[x];
    const std::uint64_t degree = mod.degrees[x];
    std::vector<Cyclotomic> vals;
    vals.reserve(k);
    for (std::size_t c = 0; c < k; ++c) {
      // Eigenvalue multiplicities of rho(g) recovered from the values on <g>.
      const int o = g->element_order(g->class_rep(c));
      const std::uint64_t zo = detail::pow_mod(mod.zeta, static_cast<std::uint64_t>(e / o), p);
      const std::uint64_t inv_o = detail::inv_mod(static_cast<std::uint64_t>(o) % p, p);
      std::vector<Rational> coeffs(static_cast<std::size_t>(e));
      std::uint64_t check = 0;
      for (int j = 0; j < o; ++j) {
        std::uint64_t acc = 0;
        for (int t = 0; t < o; ++t) {
          const std::uint64_t v = chi[static_cast<std::size_t>(g->class_power(c, t))];
          const std::uint64_t w = detail::pow_mod(zo, static_cast<std::uint64_t>((o - (static_cast<long>(t) * j) % o) % o), p);
          acc = (acc + v * w) % p;
        }
        const std::uint64_t mult = acc * inv_o % p;
        if (mult > degree) throw Error("eigenvalue multiplicity lift failed (p = " + std::to_string(p) + ")");
        coeffs[static_cast<std::size_t>(j * (e / o))] += Rational(static_cast<unsigned long>(mult));
        check = (check + mult * detail::pow_mod(zo, static_cast<std::uint64_t>(j), p)) % p;
      }
      if (check != chi[c]) throw Error("lifted character value disagrees with its reduction");
      vals.emplace_back(e, std::move(coeffs));
    }
    table.irreducibles.emplace_back(g, std::move(vals));
  }
  std::sort(table.irreducibles.begin(), table.irreducibles.end(), [](const ClassFunction& a, const ClassFunction& b) {
    auto da = a.degree().to_rational(), db = b.degree().to_rational();
    if (da != db) return da < db;
    return a.values() > b.values();
  });
  return table;
}

Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b) {
  if (a.group() != b.group()) throw InvalidInput("inner product of class functions on different groups");
  const auto& g = *a.group();
  Cyclotomic sum;
  for (std::size_t c = 0; c < g.num_classes(); ++c) {
    if (a.at_class(c).is_zero() || b.at_class(c).is_zero()) continue;
    sum += Cyclotomic(Rational(static_cast<unsigned long>(g.class_size(c)))) * a.at_class(c) * b.at_class(c).conj();
  }
  sum /= Rational(static_cast<unsigned long>(g.order()));
  return sum;
}

ClassFunction restrict(const ClassFunction& psi, const Subgroup& h) {
  if (psi.group() != h.parent) throw InvalidInput("restriction: class function is not on the parent group");
  const auto& sub = *h.group;
  std::vector<Cyclotomic> vals;
  vals.reserve(sub.num_classes());
  for (std::size_t c = 0; c < sub.num_classes(); ++c)
    vals.push_back(psi(h.embedding[static_cast<std::size_t>(sub.class_rep(c))]));
  return ClassFunction(h.group, std::move(vals));
}

ClassFunction induce(const ClassFunction& theta, const Subgroup& h) {
  if (theta.group() != h.group) throw InvalidInput("induction: class function is not on the subgroup");
  const auto& g = *h.parent;
  const auto& sub = *h.group;
  std::vector<Cyclotomic> vals;
  vals.reserve(g.num_classes());
  for (std::size_t c = 0; c < g.num_classes(); ++c) {
    // Ind theta(g) = |C_G(g)| / |H| * sum over y in class(g) \cap H of theta(y).
    const auto& members = g.class_members(c);
    Cyclotomic s;
    for (int y : members) {
      int k = h.index_in_subgroup[static_cast<std::size_t>(y)];
      if (k >= 0) s += theta(k);
    }
    Rational factor(static_cast<unsigned long>(g.order() / members.size()), static_cast<unsigned long>(sub.order()));
    factor.canonicalize();
    vals.push_back(Cyclotomic(factor) * s);
  }
  return ClassFunction(h.parent, std::move(vals));
}

ClassFunction contragredient(const ClassFunction& theta) {
  std::vector<Cyclotomic> vals;
  vals.reserve(theta.values().size());
  for (const auto& v : theta.values()) vals.push_back(v.conj());
  return ClassFunction(theta.group(), std::move(vals));
}

std::vector<Cyclotomic> decompose(const ClassFunction& theta, const CharacterTable& table) {
  std::vector<Cyclotomic> out;
  out.reserve(table.size());
  for (const auto& chi : table.irreducibles) out.push_back(inner_product(theta, chi));
  return out;
}

ClassFunction combine(const std::vector<Cyclotomic>& coefficients, const CharacterTable& table) {
  if (coefficients.size() != table.size()) throw InvalidInput("coefficient count does not match the table");
  ClassFunction out = ClassFunction::zero(table.group);
  for (std::size_t i = 0; i < coefficients.size(); ++i)
    if (!coefficients[i].is_zero()) out += coefficients[i] * table.irreducibles[i];
  return out;
}

}  // namespace stdual
