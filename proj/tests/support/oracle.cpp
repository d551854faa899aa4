#include "oracle.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "stdual/chartheory.hpp"

namespace oracle {

namespace {

Perm compose(const Perm& a, const Perm& b) {  // a then b
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[static_cast<std::size_t>(a[i])];
  return out;
}

std::vector<int> closure_of(const Table& t, std::vector<int> gens) {
  std::set<int> seen{identity_of(t)};
  std::vector<int> todo{identity_of(t)};
  while (!todo.empty()) {
    int x = todo.back();
    todo.pop_back();
    for (int g : gens) {
      int y = t[static_cast<std::size_t>(x)][static_cast<std::size_t>(g)];
      if (seen.insert(y).second) todo.push_back(y);
    }
  }
  return {seen.begin(), seen.end()};
}

NamedGroup named(std::string name, const std::vector<Perm>& gens) {
  NamedGroup g{std::move(name), perm_table(perm_closure(gens)), {}};
  g.subgroups = small_subgroups(g.table);
  return g;
}

}  // namespace

std::vector<Perm> perm_closure(const std::vector<Perm>& gens) {
  const std::size_t n = gens.empty() ? 1 : gens[0].size();
  Perm id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = static_cast<int>(i);
  std::vector<Perm> elems{id};
  std::set<Perm> seen{id};
  for (std::size_t k = 0; k < elems.size(); ++k)
    for (const auto& g : gens) {
      Perm p = compose(elems[k], g);
      if (seen.insert(p).second) elems.push_back(p);
    }
  return elems;
}

Table perm_table(const std::vector<Perm>& elems) {
  std::map<Perm, int> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);
  Table t(elems.size(), std::vector<int>(elems.size()));
  for (std::size_t a = 0; a < elems.size(); ++a)
    for (std::size_t b = 0; b < elems.size(); ++b) t[a][b] = index.at(compose(elems[a], elems[b]));
  return t;
}

NamedGroup cyclic(int n) {
  Perm g(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] = (i + 1) % n;
  return named("Z/" + std::to_string(n), {g});
}

NamedGroup klein_four() { return named("Klein four", {{1, 0, 3, 2}, {2, 3, 0, 1}}); }
NamedGroup symmetric3() { return named("S_3", {{1, 0, 2}, {1, 2, 0}}); }
NamedGroup weyl_a2() { return named("W(A_2)", {{1, 0, 2}, {0, 2, 1}}); }
// Signed permutations of e1, e2 acting on +e1, +e2, -e1, -e2.
NamedGroup weyl_b2() { return named("W(B_2)", {{1, 0, 3, 2}, {0, 3, 2, 1}}); }
NamedGroup weyl_a3() { return named("W(A_3)", {{1, 0, 2, 3}, {0, 2, 1, 3}, {0, 1, 3, 2}}); }

NamedGroup quaternion8() {
  using Q = std::array<int, 4>;
  auto mul = [](const Q& p, const Q& q) {
    return Q{p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3],
             p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2],
             p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1],
             p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0]};
  };
  std::vector<Q> units;
  for (int k = 0; k < 4; ++k)
    for (int s : {1, -1}) {
      Q q{0, 0, 0, 0};
      q[static_cast<std::size_t>(k)] = s;
      units.push_back(q);
    }
  Table t(8, std::vector<int>(8));
  for (std::size_t a = 0; a < 8; ++a)
    for (std::size_t b = 0; b < 8; ++b) {
      Q p = mul(units[a], units[b]);
      t[a][b] = static_cast<int>(std::find(units.begin(), units.end(), p) - units.begin());
    }
  NamedGroup g{"Q_8", t, {}};
  g.subgroups = small_subgroups(t);
  return g;
}

std::vector<NamedGroup> builtin_groups() {
  return {cyclic(2),     klein_four(), cyclic(4), symmetric3(), quaternion8(),
          weyl_a2(),     weyl_b2(),    weyl_a3()};
}

int identity_of(const Table& t) {
  for (std::size_t e = 0; e < t.size(); ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < t.size() && ok; ++x) ok = t[e][x] == static_cast<int>(x);
    if (ok) return static_cast<int>(e);
  }
  return -1;
}

int inverse_of(const Table& t, int g) {
  const int id = identity_of(t);
  for (std::size_t x = 0; x < t.size(); ++x)
    if (t[static_cast<std::size_t>(g)][x] == id) return static_cast<int>(x);
  return -1;
}

std::vector<std::vector<int>> small_subgroups(const Table& t) {
  std::set<std::vector<int>> found;
  const int n = static_cast<int>(t.size());
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) found.insert(closure_of(t, {a, b}));
  return {found.begin(), found.end()};
}

std::vector<std::vector<int>> classes(const Table& t) {
  const int n = static_cast<int>(t.size());
  std::vector<int> cls(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> out;
  for (int g = 0; g < n; ++g) {
    if (cls[static_cast<std::size_t>(g)] >= 0) continue;
    std::set<int> members;
    for (int x = 0; x < n; ++x)
      members.insert(t[static_cast<std::size_t>(t[static_cast<std::size_t>(inverse_of(t, x))][static_cast<std::size_t>(g)])]
                      [static_cast<std::size_t>(x)]);
    for (int m : members) cls[static_cast<std::size_t>(m)] = static_cast<int>(out.size());
    out.emplace_back(members.begin(), members.end());
  }
  return out;
}

Cyclotomic inner(const Table& t, const Values& a, const Values& b) {
  Cyclotomic sum;
  for (std::size_t g = 0; g < t.size(); ++g) sum += a[g] * b[g].conj();
  sum /= Rational(static_cast<long>(t.size()));
  return sum;
}

Values induce(const Table& t, const std::vector<int>& h, const Values& theta) {
  std::set<int> hs(h.begin(), h.end());
  Values out(t.size());
  for (std::size_t g = 0; g < t.size(); ++g) {
    Cyclotomic sum;
    for (std::size_t x = 0; x < t.size(); ++x) {
      int c = t[static_cast<std::size_t>(t[static_cast<std::size_t>(inverse_of(t, static_cast<int>(x)))][g])][x];
      if (hs.count(c)) sum += theta[static_cast<std::size_t>(c)];
    }
    sum /= Rational(static_cast<long>(h.size()));
    out[g] = sum;
  }
  return out;
}

long weyl_order(char family, int rank) {
  long fact = 1;
  for (int k = 2; k <= rank; ++k) fact *= k;
  switch (family) {
    case 'A':
      return fact * (rank + 1);
    case 'B':
    case 'C':
      return fact << rank;
    case 'D':
      return fact << (rank - 1);
  }
  return 0;
}

bool strict_cone_feasible(const std::vector<Vector>& constraints, std::size_t dim) {
  std::vector<Vector> cs = constraints;
  for (std::size_t v = 0; v < dim; ++v) {
    std::vector<Vector> pos, neg, next;
    for (auto& c : cs) {
      if (c[v] > 0) pos.push_back(c);
      else if (c[v] < 0) neg.push_back(c);
      else next.push_back(c);
    }
    for (const auto& p : pos)
      for (const auto& q : neg) {
        Vector r(dim);
        // (-q_v) p + p_v q eliminates x_v; positive weights keep strictness.
        for (std::size_t k = 0; k < dim; ++k) r[k] = -q[v] * p[k] + p[v] * q[k];
        next.push_back(r);
      }
    cs = std::move(next);
  }
  // Only 0 > 0 can remain.
  return cs.empty();
}

std::size_t fixed_dim(const Matrix& m) {
  return m.rows() - stdual::rank(m - Matrix::identity(m.rows()));
}

Values sign_values(const stdual::Scenario& s) {
  const auto& ext = s.extension;
  const auto& act = *s.r_group->linear_action();
  Values out;
  for (std::size_t t = 0; t < ext.total->order(); ++t) {
    std::size_t d = fixed_dim(act[static_cast<std::size_t>(ext.projection[t])]);
    out.emplace_back(d % 2 ? -1 : 1);
  }
  return out;
}

std::vector<int> stabilizer(const stdual::Scenario& s, std::size_t levi) {
  const auto& act = *s.r_group->linear_action();
  const auto& al = s.lattice[levi].split_component;
  std::vector<int> out;
  for (std::size_t r = 0; r < act.size(); ++r) {
    bool fixes = true;
    for (std::size_t k = 0; k < al.dim() && fixes; ++k) {
      Vector c = s.levi_m.split_component.coordinates(al.basis().row(k));
      fixes = act[r] * c == c;
    }
    if (fixes) out.push_back(static_cast<int>(r));
  }
  return out;
}

namespace {

Table total_table(const stdual::Scenario& s) {
  const auto& g = *s.extension.total;
  Table t(g.order(), std::vector<int>(g.order()));
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b) t[a][b] = g.mul(static_cast<int>(a), static_cast<int>(b));
  return t;
}

std::vector<int> preimage(const stdual::Scenario& s, const std::vector<int>& r) {
  std::set<int> want(r.begin(), r.end());
  std::vector<int> out;
  for (std::size_t t = 0; t < s.extension.projection.size(); ++t)
    if (want.count(s.extension.projection[t])) out.push_back(static_cast<int>(t));
  return out;
}

}  // namespace

Values dual(const stdual::Scenario& s, const std::vector<std::size_t>& family, const Values& f) {
  Table t = total_table(s);
  Values out(t.size());
  for (std::size_t k : family) {
    Values ind = induce(t, preimage(s, stabilizer(s, k)), f);
    const bool odd = s.lattice[k].dim_A() % 2;
    for (std::size_t g = 0; g < t.size(); ++g) out[g] += odd ? -ind[g] : ind[g];
  }
  return out;
}

Values steinberg(const stdual::Scenario& s, const std::vector<std::size_t>& family) {
  return dual(s, family, Values(s.extension.total->order(), Cyclotomic(1)));
}

Values values_of(const stdual::ClassFunction& f) {
  Values out;
  for (std::size_t g = 0; g < f.group()->order(); ++g) out.push_back(f(static_cast<int>(g)));
  return out;
}

}  // namespace oracle
