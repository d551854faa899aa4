#include "stdual/cone.hpp"

#include "stdual/errors.hpp"

namespace stdual {

std::optional<Vector> strict_cone_point(const std::vector<Vector>& constraints, std::size_t dim) {
  const std::size_t m = constraints.size();
  if (m == 0) return Vector(dim);
  for (const auto& c : constraints)
    if (c.size() != dim) throw InvalidInput("cone constraint has wrong dimension");

  // Columns: u (dim), v (dim), slack s (m), artificial a (m), rhs.
  // Row i: c_i.u - c_i.v - s_i + a_i = 1.
  const std::size_t nvar = 2 * dim + 2 * m;
  const std::size_t rhs = nvar;
  std::vector<Vector> t(m, Vector(nvar + 1));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      t[i][j] = constraints[i][j];
      t[i][dim + j] = -constraints[i][j];
    }
    t[i][2 * dim + i] = -1;
    t[i][2 * dim + m + i] = 1;
    t[i][rhs] = 1;
    basis[i] = 2 * dim + m + i;
  }
  auto is_artificial = [&](std::size_t j) { return j >= 2 * dim + m && j < nvar; };

  for (;;) {
    // Reduced cost of column j: cost_j - sum over rows of cost(basis) * t[i][j].
    std::size_t enter = nvar;
    for (std::size_t j = 0; j < nvar && enter == nvar; ++j) {
      Rational r = is_artificial(j) ? 1 : 0;
      for (std::size_t i = 0; i < m; ++i)
        if (is_artificial(basis[i])) r -= t[i][j];
      if (r < 0) enter = j;
    }
    if (enter == nvar) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][rhs] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break;  // unbounded direction cannot occur in phase one
    Rational piv = t[leave][enter];
    for (auto& x : t[leave]) x /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rational f = t[i][enter];
      for (std::size_t j = 0; j <= nvar; ++j) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  Rational infeasibility = 0;
  for (std::size_t i = 0; i < m; ++i)
    if (is_artificial(basis[i])) infeasibility += t[i][rhs];
  if (infeasibility != 0) return std::nullopt;

  Vector x(dim);
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < dim) x[basis[i]] += t[i][rhs];
    else if (basis[i] < 2 * dim) x[basis[i] - dim] -= t[i][rhs];
  }
  return x;
}

}  // namespace stdual
