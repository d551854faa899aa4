#include "stdual/group.hpp"

#include <algorithm>
#include <numeric>

#include "closure.hpp"
#include "stdual/errors.hpp"

namespace stdual {

namespace {

std::vector<int> compose(const std::vector<int>& p, const std::vector<int>& q) {
  // (p * q)(i) = q(p(i)): apply p first, then q.
  std::vector<int> r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[static_cast<std::size_t>(p[i])];
  return r;
}

}  // namespace

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<int>>& table) {
  const std::size_t n = table.size();
  if (n == 0) throw InvalidInput("group table is empty");
  FiniteGroup g;
  g.n_ = n;
  g.table_.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n)
      throw InvalidInput("group table row " + std::to_string(a) + " has length " + std::to_string(table[a].size()) +
                         ", expected " + std::to_string(n));
    for (int x : table[a]) {
      if (x < 0 || static_cast<std::size_t>(x) >= n)
        throw InvalidInput("group table entry " + std::to_string(x) + " out of range");
      g.table_.push_back(x);
    }
  }
  int id = -1;
  for (std::size_t e = 0; e < n && id < 0; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      ok = g.mul(static_cast<int>(e), static_cast<int>(a)) == static_cast<int>(a) &&
           g.mul(static_cast<int>(a), static_cast<int>(e)) == static_cast<int>(a);
    if (ok) id = static_cast<int>(e);
  }
  if (id < 0) throw InvalidInput("group table has no identity element");
  g.identity_ = id;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        int ab = g.mul(static_cast<int>(a), static_cast<int>(b));
        int bc = g.mul(static_cast<int>(b), static_cast<int>(c));
        if (g.mul(ab, static_cast<int>(c)) != g.mul(static_cast<int>(a), bc))
          throw InvalidInput("group table is not associative at (" + std::to_string(a) + ", " + std::to_string(b) +
                             ", " + std::to_string(c) + ")");
      }
  for (std::size_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < n && !found; ++b)
      found = g.mul(static_cast<int>(a), static_cast<int>(b)) == id;
    if (!found) throw InvalidInput("element " + std::to_string(a) + " has no inverse");
  }
  g.finish();
  return g;
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<std::vector<int>>& generators, std::size_t cap) {
  if (generators.empty()) throw InvalidInput("permutation group needs at least one generator");
  const std::size_t degree = generators.front().size();
  for (const auto& p : generators) {
    std::vector<int> sorted = p;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> expect(degree);
    std::iota(expect.begin(), expect.end(), 0);
    if (p.size() != degree || sorted != expect) throw InvalidInput("generator is not a permutation of 0..n-1");
  }
  std::vector<int> id(degree);
  std::iota(id.begin(), id.end(), 0);
  auto c = detail::close_under(generators, id, compose, [](const std::vector<int>& p) { return p; }, cap, "g");
  return from_generated(c.table(generators.size()), c.elements.size(), std::nullopt, std::move(c.labels));
}

FiniteGroup FiniteGroup::from_matrices(const std::vector<Matrix>& generators, std::size_t cap) {
  if (generators.empty()) throw InvalidInput("matrix group needs at least one generator");
  const std::size_t dim = generators.front().rows();
  for (const auto& m : generators)
    if (!m.square() || m.rows() != dim || !inverse(m)) throw InvalidInput("matrix generator is not invertible of common size");
  auto c = detail::close_under(
      generators, Matrix::identity(dim), [](const Matrix& a, const Matrix& b) { return a * b; },
      [](const Matrix& m) { return m.str(); }, cap, "g");
  auto table = c.table(generators.size());
  return from_generated(std::move(table), c.elements.size(), std::move(c.elements), std::move(c.labels));
}

FiniteGroup FiniteGroup::from_generated(std::vector<int> flat_table, std::size_t order,
                                        std::optional<std::vector<Matrix>> action, std::vector<std::string> labels) {
  FiniteGroup g;
  g.n_ = order;
  g.table_ = std::move(flat_table);
  g.action_ = std::move(action);
  g.labels_ = std::move(labels);
  g.identity_ = -1;
  for (std::size_t e = 0; e < order; ++e) {
    if (g.mul(static_cast<int>(e), static_cast<int>(e)) == static_cast<int>(e)) {
      g.identity_ = static_cast<int>(e);
      break;
    }
  }
  if (g.identity_ < 0) throw InvalidInput("generated table has no identity");
  g.finish();
  return g;
}

void FiniteGroup::finish() {
  inverse_.assign(n_, -1);
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b)
      if (mul(static_cast<int>(a), static_cast<int>(b)) == identity_) {
        inverse_[a] = static_cast<int>(b);
        break;
      }
  orders_.assign(n_, 0);
  exponent_ = 1;
  for (std::size_t a = 0; a < n_; ++a) {
    int k = 1, x = static_cast<int>(a);
    while (x != identity_) {
      x = mul(x, static_cast<int>(a));
      ++k;
    }
    orders_[a] = k;
    exponent_ = std::lcm(exponent_, k);
  }
  class_of_.assign(n_, -1);
  for (std::size_t a = 0; a < n_; ++a) {
    if (class_of_[a] >= 0) continue;
    const int c = static_cast<int>(class_reps_.size());
    class_reps_.push_back(static_cast<int>(a));
    std::vector<int> members;
    for (std::size_t x = 0; x < n_; ++x) {
      int y = conj(static_cast<int>(a), static_cast<int>(x));
      if (class_of_[static_cast<std::size_t>(y)] < 0) {
        class_of_[static_cast<std::size_t>(y)] = c;
        members.push_back(y);
      }
    }
    std::sort(members.begin(), members.end());
    class_members_.push_back(std::move(members));
  }
}

int FiniteGroup::power(int a, long k) const {
  long o = element_order(a);
  k %= o;
  if (k < 0) k += o;
  int x = identity_;
  for (long i = 0; i < k; ++i) x = mul(x, a);
  return x;
}

bool FiniteGroup::is_abelian() const { return num_classes() == n_; }

bool FiniteGroup::is_central(int z) const { return class_size(static_cast<std::size_t>(class_of(z))) == 1; }

std::string FiniteGroup::label(int g) const {
  if (static_cast<std::size_t>(g) < labels_.size()) return labels_[static_cast<std::size_t>(g)];
  return "#" + std::to_string(g);
}

Subgroup make_subgroup(const GroupPtr& parent, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  const std::size_t n = parent->order();
  std::vector<int> index(n, -1);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    int e = elements[i];
    if (e < 0 || static_cast<std::size_t>(e) >= n) throw InvalidInput("subgroup element out of range");
    index[static_cast<std::size_t>(e)] = static_cast<int>(i);
  }
  if (elements.empty() || index[static_cast<std::size_t>(parent->identity())] < 0)
    throw InvalidInput("subset does not contain the identity");
  const std::size_t m = elements.size();
  std::vector<int> table(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      int p = parent->mul(elements[a], elements[b]);
      int k = index[static_cast<std::size_t>(p)];
      if (k < 0)
        throw InvalidInput("subset is not a subgroup: product of " + std::to_string(elements[a]) + " and " +
                           std::to_string(elements[b]) + " leaves it");
      table[a * m + b] = k;
    }
  std::optional<std::vector<Matrix>> action;
  if (parent->linear_action()) {
    action.emplace();
    for (int e : elements) action->push_back((*parent->linear_action())[static_cast<std::size_t>(e)]);
  }
  std::vector<std::string> labels;
  for (int e : elements) labels.push_back(parent->label(e));
  auto group = std::make_shared<const FiniteGroup>(
      FiniteGroup::from_generated(std::move(table), m, std::move(action), std::move(labels)));
  return Subgroup{parent, std::move(group), std::move(elements), std::move(index)};
}

std::vector<int> generated_subgroup(const FiniteGroup& g, const std::vector<int>& generators) {
  std::vector<char> seen(g.order(), 0);
  std::vector<int> out{g.identity()};
  seen[static_cast<std::size_t>(g.identity())] = 1;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (int s : generators) {
      int p = g.mul(out[i], s);
      if (!seen[static_cast<std::size_t>(p)]) {
        seen[static_cast<std::size_t>(p)] = 1;
        out.push_back(p);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace stdual
