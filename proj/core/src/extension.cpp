#include "stdual/extension.hpp"

#include <algorithm>

#include "stdual/errors.hpp"

namespace stdual {

CentralExtension CentralExtension::split(const GroupPtr& g) {
  CentralExtension ext;
  ext.total = g;
  ext.quotient = g;
  ext.center = {g->identity()};
  ext.chi = {Cyclotomic(1)};
  for (std::size_t e = 0; e < g->order(); ++e) ext.projection.push_back(static_cast<int>(e));
  return ext;
}

bool CentralExtension::chi_trivial() const {
  return std::all_of(chi.begin(), chi.end(), [](const Cyclotomic& c) { return c == Cyclotomic(1); });
}

const Cyclotomic& CentralExtension::chi_at(int z) const {
  for (std::size_t i = 0; i < center.size(); ++i)
    if (center[i] == z) return chi[i];
  throw InvalidInput("element " + std::to_string(z) + " is not in the center subgroup");
}

std::vector<int> CentralExtension::preimage(const std::vector<int>& quotient_elements) const {
  std::vector<char> want(quotient->order(), 0);
  for (int q : quotient_elements) want[static_cast<std::size_t>(q)] = 1;
  std::vector<int> out;
  for (std::size_t t = 0; t < total->order(); ++t)
    if (want[static_cast<std::size_t>(projection[t])]) out.push_back(static_cast<int>(t));
  return out;
}

std::vector<std::string> CentralExtension::violations() const {
  std::vector<std::string> out;
  if (!total || !quotient) return {"extension is missing a group"};
  const auto& t = *total;
  const auto& q = *quotient;
  if (projection.size() != t.order()) return {"projection must list one image per total element"};
  for (int x : projection)
    if (x < 0 || static_cast<std::size_t>(x) >= q.order()) return {"projection image out of range"};
  if (chi.size() != center.size()) out.push_back("chi must list one value per center element");
  for (int z : center) {
    if (z < 0 || static_cast<std::size_t>(z) >= t.order()) return {"center element out of range"};
    if (!t.is_central(z)) out.push_back("center element " + t.label(z) + " is not central");
  }
  for (std::size_t a = 0; a < t.order(); ++a)
    for (std::size_t b = 0; b < t.order(); ++b) {
      int ab = t.mul(static_cast<int>(a), static_cast<int>(b));
      if (projection[static_cast<std::size_t>(ab)] != q.mul(projection[a], projection[b])) {
        out.push_back("projection is not a homomorphism at (" + t.label(static_cast<int>(a)) + ", " +
                      t.label(static_cast<int>(b)) + ")");
        a = t.order();
        break;
      }
    }
  std::vector<char> hit(q.order(), 0);
  std::vector<int> kernel;
  for (std::size_t e = 0; e < t.order(); ++e) {
    hit[static_cast<std::size_t>(projection[e])] = 1;
    if (projection[e] == q.identity()) kernel.push_back(static_cast<int>(e));
  }
  for (std::size_t e = 0; e < q.order(); ++e)
    if (!hit[e]) {
      out.push_back("projection misses quotient element " + q.label(static_cast<int>(e)));
      break;
    }
  std::vector<int> z = center;
  std::sort(z.begin(), z.end());
  if (z != kernel) out.push_back("kernel of the projection differs from the center subgroup");
  if (chi.size() == center.size()) {
    for (std::size_t i = 0; i < center.size(); ++i) {
      Rational exponent;
      if (!chi[i].root_of_unity_exponent(exponent))
        out.push_back("chi(" + t.label(center[i]) + ") = " + chi[i].str() + " is not a root of unity");
    }
    for (std::size_t i = 0; i < center.size(); ++i)
      for (std::size_t j = 0; j < center.size(); ++j) {
        int prod = t.mul(center[i], center[j]);
        auto it = std::find(center.begin(), center.end(), prod);
        if (it == center.end()) {
          out.push_back("center subset is not closed under multiplication");
          return out;
        }
        if (chi[static_cast<std::size_t>(it - center.begin())] != chi[i] * chi[j]) {
          out.push_back("chi is not a homomorphism at (" + t.label(center[i]) + ", " + t.label(center[j]) + ")");
          return out;
        }
      }
  }
  return out;
}

SubExtension sub_extension(const CentralExtension& ext, const std::vector<int>& quotient_elements) {
  Subgroup qsub = make_subgroup(ext.quotient, quotient_elements);
  Subgroup tsub = make_subgroup(ext.total, ext.preimage(qsub.embedding));
  CentralExtension sub;
  sub.total = tsub.group;
  sub.quotient = qsub.group;
  for (std::size_t i = 0; i < ext.center.size(); ++i) {
    sub.center.push_back(tsub.index_in_subgroup[static_cast<std::size_t>(ext.center[i])]);
    sub.chi.push_back(ext.chi[i]);
  }
  for (int t : tsub.embedding)
    sub.projection.push_back(qsub.index_in_subgroup[static_cast<std::size_t>(ext.projection[static_cast<std::size_t>(t)])]);
  return SubExtension{std::move(tsub), std::move(qsub), std::move(sub)};
}

std::vector<ClassFunction> IsotypicFamily::characters() const {
  std::vector<ClassFunction> out;
  for (auto m : members) out.push_back(table.irreducibles[m]);
  return out;
}

IsotypicFamily chi_isotypic(const CentralExtension& ext) {
  IsotypicFamily fam{character_table(ext.total), {}};
  for (std::size_t i = 0; i < fam.table.size(); ++i) {
    const auto& theta = fam.table.irreducibles[i];
    bool ok = true;
    for (std::size_t k = 0; k < ext.center.size() && ok; ++k)
      ok = theta(ext.center[k]) == ext.chi[k] * theta.degree();
    if (ok) fam.members.push_back(i);
  }
  return fam;
}

std::vector<Cyclotomic> triplet_expand(const IsotypicFamily& family, int r) {
  std::vector<Cyclotomic> out;
  for (std::size_t i = 0; i < family.size(); ++i) out.push_back(family.at(i)(r).conj());
  return out;
}

std::vector<Cyclotomic> triplet_expand(const CentralExtension& ext, int r) {
  return triplet_expand(chi_isotypic(ext), r);
}

std::vector<Cyclotomic> triplet_invert(const IsotypicFamily& family, std::size_t rho) {
  if (rho >= family.size()) throw InvalidInput("index outside the isotypic family");
  const auto& theta = family.at(rho);
  const auto& g = *theta.group();
  std::vector<Cyclotomic> out;
  const Rational scale(1, static_cast<unsigned long>(g.order()));
  for (std::size_t e = 0; e < g.order(); ++e) out.push_back(Cyclotomic(scale) * theta(static_cast<int>(e)));
  return out;
}

std::vector<Cyclotomic> triplet_invert(const CentralExtension& ext, std::size_t rho) {
  return triplet_invert(chi_isotypic(ext), rho);
}

bool is_essential(const CentralExtension& ext, int r) {
  const auto& t = *ext.total;
  const int cls = t.class_of(r);
  for (std::size_t i = 0; i < ext.center.size(); ++i) {
    // z.cl(r) is a class; it equals cl(r) iff z r is conjugate to r.
    if (t.class_of(t.mul(ext.center[i], r)) == cls && ext.chi[i] != Cyclotomic(1)) return false;
  }
  return true;
}

std::vector<std::vector<std::size_t>> essential_orbits(const CentralExtension& ext) {
  const auto& t = *ext.total;
  std::vector<char> seen(t.num_classes(), 0);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t c = 0; c < t.num_classes(); ++c) {
    if (seen[c]) continue;
    std::vector<std::size_t> orbit;
    for (int z : ext.center) {
      auto d = static_cast<std::size_t>(t.class_of(t.mul(z, t.class_rep(c))));
      if (!seen[d]) {
        seen[d] = 1;
        orbit.push_back(d);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    if (is_essential(ext, t.class_rep(c))) out.push_back(std::move(orbit));
  }
  return out;
}

}  // namespace stdual
