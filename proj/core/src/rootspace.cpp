#include "stdual/rootspace.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "stdual/cone.hpp"
#include "stdual/errors.hpp"

namespace stdual {

namespace {

Vector unit(std::size_t n, std::size_t i, long s = 1) {
  Vector v(n);
  v[i] = s;
  return v;
}

Vector add(Vector a, const Vector& b, long s = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += s * b[i];
  return a;
}

Vector negate(Vector v) {
  for (auto& x : v) x = -x;
  return v;
}

// Fills simple_coordinates and checks every invariant.
void finalize(RootSystem& rs) {
  const std::size_t n = rs.ambient_dim;
  if (rs.roots.empty()) throw InvalidInput("root system has no roots");
  for (const auto& r : rs.roots) {
    if (r.size() != n) throw InvalidInput("root " + to_string(r) + " has wrong dimension");
    if (is_zero(r)) throw InvalidInput("zero vector in root list");
  }
  for (std::size_t i = 0; i < rs.roots.size(); ++i)
    for (std::size_t j = i + 1; j < rs.roots.size(); ++j)
      if (rs.roots[i] == rs.roots[j]) throw InvalidInput("duplicate root " + to_string(rs.roots[i]));
  for (const auto& r : rs.roots) {
    if (rs.index_of(negate(r)) < 0) throw InvalidInput("root " + to_string(r) + " has no negative in the list");
    for (const auto& s : rs.roots) {
      if (&r == &s) continue;
      // s = t r with t > 0, t != 1 violates reducedness.
      if (primitive(r) == primitive(s)) throw InvalidInput("roots " + to_string(r) + " and " + to_string(s) + " are proportional");
    }
  }
  for (auto k : rs.simple_roots)
    if (k >= rs.roots.size()) throw InvalidInput("simple root index out of range");

  std::vector<Vector> simple_rows;
  for (auto k : rs.simple_roots) simple_rows.push_back(rs.roots[k]);
  if (rank(Matrix::from_rows(simple_rows, n)) != simple_rows.size())
    throw InvalidInput("simple roots are linearly dependent");
  // Solve root = sum_k c_k simple_k via the transposed system.
  Matrix s = Matrix::from_rows(simple_rows, n).transpose();  // n x rank
  const std::size_t r = simple_rows.size();
  rs.simple_coordinates.clear();
  for (const auto& root : rs.roots) {
    Matrix aug(n, r + 1);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < r; ++k) aug(i, k) = s(i, k);
      aug(i, r) = root[i];
    }
    Echelon e = rref(aug);
    if (!e.pivots.empty() && e.pivots.back() == r)
      throw InvalidInput("root " + to_string(root) + " is not in the span of the simple roots");
    Vector coords(r);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) coords[e.pivots[i]] = e.reduced(i, r);
    bool all_nonneg = true, all_nonpos = true;
    for (const auto& c : coords) {
      if (c.get_den() != 1) throw InvalidInput("root " + to_string(root) + " is not an integer combination of simple roots");
      if (c < 0) all_nonneg = false;
      if (c > 0) all_nonpos = false;
    }
    if (!all_nonneg && !all_nonpos)
      throw InvalidInput("root " + to_string(root) + " has simple coordinates of mixed sign");
    rs.simple_coordinates.push_back(std::move(coords));
  }
  for (std::size_t a = 0; a < rs.roots.size(); ++a) {
    Matrix refl = rs.reflection(a);
    for (const auto& b : rs.roots)
      if (rs.index_of(refl * b) < 0)
        throw InvalidInput("reflection in " + to_string(rs.roots[a]) + " sends " + to_string(b) + " outside the roots");
  }
}

}  // namespace

bool RootSystem::is_positive(std::size_t root) const {
  for (const auto& c : simple_coordinates[root]) {
    if (c > 0) return true;
    if (c < 0) return false;
  }
  return false;
}

int RootSystem::index_of(const Vector& v) const {
  for (std::size_t i = 0; i < roots.size(); ++i)
    if (roots[i] == v) return static_cast<int>(i);
  return -1;
}

Matrix RootSystem::reflection(std::size_t root) const {
  const Vector& a = roots[root];
  const Rational norm = dot(a, a);
  Matrix m = Matrix::identity(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i)
    for (std::size_t j = 0; j < ambient_dim; ++j) m(i, j) -= 2 * a[i] * a[j] / norm;
  return m;
}

RootSystem build_root_system(char family, int rank, int rank_cap) {
  const int min_rank = family == 'A' ? 1 : family == 'B' || family == 'C' ? 2 : family == 'D' ? 3 : -1;
  if (min_rank < 0) throw InvalidInput(std::string("unsupported root system family '") + family + "'");
  if (rank < min_rank || rank > rank_cap)
    throw InvalidInput(std::string("rank ") + std::to_string(rank) + " unsupported for family " + family +
                       " (allowed " + std::to_string(min_rank) + ".." + std::to_string(rank_cap) + ")");
  const std::size_t n = static_cast<std::size_t>(rank);
  RootSystem rs;
  rs.family_tag = std::string(1, family) + std::to_string(rank);
  std::vector<Vector> pos;
  std::vector<Vector> simple;
  if (family == 'A') {
    rs.ambient_dim = n + 1;
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t j = i + 1; j <= n; ++j) pos.push_back(add(unit(n + 1, i), unit(n + 1, j), -1));
    for (std::size_t i = 0; i < n; ++i) simple.push_back(add(unit(n + 1, i), unit(n + 1, i + 1), -1));
  } else {
    rs.ambient_dim = n;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) pos.push_back(add(unit(n, i), unit(n, j), -1));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) pos.push_back(add(unit(n, i), unit(n, j)));
    if (family == 'B')
      for (std::size_t i = 0; i < n; ++i) pos.push_back(unit(n, i));
    if (family == 'C')
      for (std::size_t i = 0; i < n; ++i) pos.push_back(unit(n, i, 2));
    for (std::size_t i = 0; i + 1 < n; ++i) simple.push_back(add(unit(n, i), unit(n, i + 1), -1));
    if (family == 'B') simple.push_back(unit(n, n - 1));
    if (family == 'C') simple.push_back(unit(n, n - 1, 2));
    if (family == 'D') simple.push_back(add(unit(n, n - 2), unit(n, n - 1)));
  }
  rs.roots = pos;
  for (const auto& p : pos) rs.roots.push_back(negate(p));
  for (const auto& s : simple) rs.simple_roots.push_back(static_cast<std::size_t>(rs.index_of(s)));
  finalize(rs);
  return rs;
}

RootSystem explicit_root_system(std::size_t ambient_dim, std::vector<Vector> roots,
                                std::vector<std::size_t> simple_roots) {
  RootSystem rs;
  rs.ambient_dim = ambient_dim;
  rs.roots = std::move(roots);
  rs.simple_roots = std::move(simple_roots);
  rs.family_tag = "explicit";
  finalize(rs);
  return rs;
}

// ---------------------------------------------------------------- Subspace

Subspace::Subspace(Matrix basis, std::size_t ambient) : basis_(std::move(basis)), ambient_(ambient) {
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    std::size_t c = 0;
    while (basis_(r, c) == 0) ++c;
    pivots_.push_back(c);
  }
}

Subspace Subspace::span(const std::vector<Vector>& vectors, std::size_t ambient_dim) {
  if (vectors.empty()) return Subspace(Matrix(0, ambient_dim), ambient_dim);
  return Subspace(rref(Matrix::from_rows(vectors, ambient_dim)).reduced, ambient_dim);
}

Subspace Subspace::whole(std::size_t ambient_dim) { return Subspace(Matrix::identity(ambient_dim), ambient_dim); }

Subspace Subspace::kernel(const std::vector<Vector>& covectors, std::size_t ambient_dim) {
  if (covectors.empty()) return whole(ambient_dim);
  return Subspace(nullspace(Matrix::from_rows(covectors, ambient_dim), ambient_dim), ambient_dim);
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_) return false;
  return from_coordinates(coordinates(v)) == v;
}

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t r = 0; r < other.dim(); ++r)
    if (!contains(other.basis_.row(r))) return false;
  return true;
}

std::vector<Vector> Subspace::annihilator() const {
  if (dim() == 0) return Matrix::identity(ambient_).row_list();
  return nullspace(basis_, ambient_).row_list();
}

Subspace Subspace::intersect(const Subspace& other) const {
  auto ann = annihilator();
  auto more = other.annihilator();
  ann.insert(ann.end(), more.begin(), more.end());
  return kernel(ann, ambient_);
}

Vector Subspace::coordinates(const Vector& v) const {
  Vector c(dim());
  for (std::size_t r = 0; r < dim(); ++r) c[r] = v[pivots_[r]];
  return c;
}

Vector Subspace::from_coordinates(const Vector& c) const {
  Vector v(ambient_);
  for (std::size_t r = 0; r < dim(); ++r)
    for (std::size_t j = 0; j < ambient_; ++j) v[j] += c[r] * basis_(r, j);
  return v;
}

bool lex_less(const Subspace& a, const Subspace& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.ambient_dim(); ++c) {
      int k = cmp(a.basis_(r, c), b.basis_(r, c));
      if (k != 0) return k < 0;
    }
  return false;
}

std::string Subspace::str() const {
  std::ostringstream os;
  os << "span{";
  for (std::size_t r = 0; r < dim(); ++r) os << (r ? ", " : "") << to_string(basis_.row(r));
  os << '}';
  return os.str();
}

// ------------------------------------------------------------------ Levis

LeviDescriptor levi_from_subset(const RootSystem& rs, const std::vector<std::size_t>& subset) {
  std::vector<Vector> covectors;
  std::vector<std::size_t> sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (auto k : sorted) {
    if (k >= rs.rank()) throw InvalidInput("simple root index " + std::to_string(k + 1) + " out of range");
    covectors.push_back(rs.simple(k));
  }
  return LeviDescriptor{Subspace::kernel(covectors, rs.ambient_dim), sorted};
}

std::optional<std::vector<std::size_t>> standard_subset(const RootSystem& rs, const Subspace& s) {
  std::vector<std::size_t> subset;
  std::vector<Vector> covectors;
  for (std::size_t k = 0; k < rs.rank(); ++k) {
    bool vanishes = true;
    for (std::size_t r = 0; r < s.dim() && vanishes; ++r) vanishes = dot(rs.simple(k), s.basis().row(r)) == 0;
    if (vanishes) {
      subset.push_back(k);
      covectors.push_back(rs.simple(k));
    }
  }
  if (Subspace::kernel(covectors, rs.ambient_dim) == s) return subset;
  return std::nullopt;
}

std::vector<Vector> restricted_roots(const RootSystem& rs, const LeviDescriptor& m) {
  const auto& a = m.split_component;
  std::vector<Vector> out;
  std::set<Vector> seen;
  for (const auto& root : rs.roots) {
    Vector c(a.dim());
    for (std::size_t r = 0; r < a.dim(); ++r) c[r] = dot(root, a.basis().row(r));
    if (is_zero(c)) continue;
    c = reduce_covector(c);
    if (seen.insert(c).second) out.push_back(std::move(c));
  }
  return out;
}

std::vector<LeviDescriptor> levi_lattice(const RootSystem& rs, const LeviDescriptor& m) {
  std::vector<Subspace> found{m.split_component};
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (const auto& root : rs.roots) {
      Subspace cut = found[i].intersect(Subspace::kernel({root}, rs.ambient_dim));
      if (std::find(found.begin(), found.end(), cut) == found.end()) found.push_back(std::move(cut));
    }
  }
  std::sort(found.begin(), found.end(), [](const Subspace& a, const Subspace& b) {
    if (a.dim() != b.dim()) return a.dim() > b.dim();
    return lex_less(a, b);
  });
  std::vector<LeviDescriptor> out;
  for (auto& s : found) {
    auto subset = standard_subset(rs, s);
    out.push_back(LeviDescriptor{std::move(s), std::move(subset)});
  }
  return out;
}

bool arthur_compatible(const RootSystem& rs, const LeviDescriptor& m, const std::vector<Vector>& delta_sigma,
                       const LeviDescriptor& l) {
  const auto restricted = restricted_roots(rs, m);
  for (const auto& d : delta_sigma) {
    if (d.size() != m.dim_A() || is_zero(d) ||
        std::find(restricted.begin(), restricted.end(), reduce_covector(d)) == restricted.end())
      throw InvalidInput("covector " + to_string(d) + " is not a restricted root of a_M");
  }
  if (!m.split_component.contains(l.split_component)) throw InvalidInput("L does not contain M");
  // Restrict each constraint to a_L, in coordinates of a_L's basis.
  const auto& al = l.split_component;
  std::vector<Vector> constraints;
  for (const auto& d : delta_sigma) {
    Vector c(al.dim());
    for (std::size_t r = 0; r < al.dim(); ++r)
      c[r] = dot(d, m.split_component.coordinates(al.basis().row(r)));
    if (!is_zero(c)) constraints.push_back(std::move(c));
  }
  return strict_cone_feasible(constraints, al.dim());
}

}  // namespace stdual
