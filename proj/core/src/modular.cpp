#include "modular.hpp"

#include <algorithm>

#include "stdual/errors.hpp"

namespace stdual::detail {

namespace {

using u64 = std::uint64_t;
using Mat = std::vector<std::vector<u64>>;

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

u64 primitive_root(u64 p) {
  std::vector<u64> factors;
  u64 m = p - 1;
  for (u64 d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) factors.push_back(m);
  for (u64 g = 2; g < p; ++g) {
    bool ok = true;
    for (u64 q : factors)
      if (pow_mod(g, (p - 1) / q, p) == 1) ok = false;
    if (ok) return g;
  }
  throw Error("no primitive root found");
}

u64 sub(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

// Row-reduce; returns basis rows of the row space in reduced echelon form.
Mat row_reduce(Mat rows, u64 p, std::vector<std::size_t>* pivots_out = nullptr) {
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && lead < rows.size(); ++c) {
    std::size_t r = lead;
    while (r < rows.size() && rows[r][c] == 0) ++r;
    if (r == rows.size()) continue;
    std::swap(rows[r], rows[lead]);
    u64 inv = inv_mod(rows[lead][c], p);
    for (auto& x : rows[lead]) x = x * inv % p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == lead || rows[i][c] == 0) continue;
      u64 f = rows[i][c];
      for (std::size_t k = 0; k < cols; ++k) rows[i][k] = sub(rows[i][k], f * rows[lead][k] % p, p);
    }
    pivots.push_back(c);
    ++lead;
  }
  rows.resize(lead);
  if (pivots_out) *pivots_out = pivots;
  return rows;
}

// Basis (rows) of {x : m x = 0}.
Mat kernel(const Mat& m, std::size_t n, u64 p) {
  std::vector<std::size_t> pivots;
  Mat r = row_reduce(m, p, &pivots);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  Mat basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<u64> v(n, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = (p - r[i][f]) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

// Characteristic polynomial det(xI - a), constant term first, via reduction
// to upper Hessenberg form.
std::vector<u64> charpoly(Mat a, u64 p) {
  const std::size_t n = a.size();
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t piv = m;
    while (piv < n && a[piv][m - 1] == 0) ++piv;
    if (piv == n) continue;
    if (piv != m) {
      std::swap(a[piv], a[m]);
      for (std::size_t i = 0; i < n; ++i) std::swap(a[i][piv], a[i][m]);
    }
    u64 inv = inv_mod(a[m][m - 1], p);
    for (std::size_t i = m + 1; i < n; ++i) {
      if (a[i][m - 1] == 0) continue;
      u64 f = a[i][m - 1] * inv % p;
      for (std::size_t j = 0; j < n; ++j) a[i][j] = sub(a[i][j], f * a[m][j] % p, p);
      for (std::size_t j = 0; j < n; ++j) a[j][m] = (a[j][m] + f * a[j][i]) % p;
    }
  }
  std::vector<std::vector<u64>> polys(n + 1);
  polys[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<u64> q(m + 1, 0);
    const auto& prev = polys[m - 1];
    for (std::size_t k = 0; k < prev.size(); ++k) {
      q[k + 1] = (q[k + 1] + prev[k]) % p;
      q[k] = sub(q[k], a[m - 1][m - 1] * prev[k] % p, p);
    }
    u64 prod = 1;
    for (std::size_t i = m - 1; i-- > 0;) {
      prod = prod * a[i + 1][i] % p;
      u64 coef = a[i][m - 1] * prod % p;
      if (coef == 0) continue;
      for (std::size_t k = 0; k < polys[i].size(); ++k) q[k] = sub(q[k], coef * polys[i][k] % p, p);
    }
    polys[m] = std::move(q);
  }
  return polys[n];
}

u64 eval(const std::vector<u64>& poly, u64 x, u64 p) {
  u64 r = 0;
  for (std::size_t k = poly.size(); k-- > 0;) r = (r * x + poly[k]) % p;
  return r;
}

// Matrix of multiplication by the class sum K_j on the class algebra, in
// the convention (A w)_l = sum_k c_{j l k} w_k so that central characters
// are right eigenvectors.
Mat class_matrix(const FiniteGroup& g, std::size_t j, u64 p) {
  const std::size_t k = g.num_classes();
  Mat a(k, std::vector<u64>(k, 0));
  for (std::size_t t = 0; t < k; ++t) {
    int gt = g.class_rep(t);
    for (int x : g.class_members(j)) {
      std::size_t l = static_cast<std::size_t>(g.class_of(g.mul(g.inv(x), gt)));
      a[l][t] = (a[l][t] + 1) % p;
    }
  }
  return a;
}

}  // namespace

u64 pow_mod(u64 b, u64 e, u64 p) {
  u64 r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

ModularTable modular_character_table(const FiniteGroup& g) {
  const std::size_t n = g.order();
  const std::size_t k = g.num_classes();
  const u64 e = static_cast<u64>(g.exponent());
  u64 p = e + 1;
  const u64 floor_p = std::max<u64>(2 * n + 1, 101);
  while (p < floor_p || !is_prime(p)) p += e;
  ModularTable out;
  out.p = p;
  out.zeta = pow_mod(primitive_root(p), (p - 1) / e, p);

  // Simultaneous eigenspaces of the class matrices.
  Mat identity(k, std::vector<u64>(k, 0));
  for (std::size_t i = 0; i < k; ++i) identity[i][i] = 1;
  std::vector<Mat> spaces{identity};
  for (std::size_t j = 0; j < k; ++j) {
    if (std::all_of(spaces.begin(), spaces.end(), [](const Mat& s) { return s.size() == 1; })) break;
    if (g.class_members(j).size() == 1 && g.class_rep(j) == g.identity()) continue;
    Mat a = class_matrix(g, j, p);
    std::vector<Mat> next;
    for (auto& space : spaces) {
      const std::size_t d = space.size();
      if (d == 1) {
        next.push_back(std::move(space));
        continue;
      }
      std::vector<std::size_t> pivots;
      space = row_reduce(space, p, &pivots);
      // c[r][i] = coordinate r of A * basis_i.
      Mat c(d, std::vector<u64>(d, 0));
      for (std::size_t i = 0; i < d; ++i) {
        std::vector<u64> w(k, 0);
        for (std::size_t l = 0; l < k; ++l)
          for (std::size_t t = 0; t < k; ++t) w[l] = (w[l] + a[l][t] * space[i][t]) % p;
        for (std::size_t r = 0; r < d; ++r) c[r][i] = w[pivots[r]];
      }
      auto poly = charpoly(c, p);
      std::size_t covered = 0;
      std::vector<Mat> pieces;
      for (u64 lambda = 0; lambda < p && covered < d; ++lambda) {
        if (eval(poly, lambda, p) != 0) continue;
        Mat shifted = c;
        for (std::size_t r = 0; r < d; ++r) shifted[r][r] = sub(shifted[r][r], lambda, p);
        Mat ker = kernel(shifted, d, p);
        if (ker.empty()) continue;
        Mat vecs;
        for (const auto& y : ker) {
          std::vector<u64> v(k, 0);
          for (std::size_t i = 0; i < d; ++i)
            for (std::size_t t = 0; t < k; ++t) v[t] = (v[t] + y[i] * space[i][t]) % p;
          vecs.push_back(std::move(v));
        }
        covered += vecs.size();
        pieces.push_back(std::move(vecs));
      }
      if (covered != d) throw Error("class algebra did not split over F_" + std::to_string(p));
      for (auto& piece : pieces) next.push_back(std::move(piece));
    }
    spaces = std::move(next);
  }
  if (spaces.size() != k) throw Error("class algebra splitting produced " + std::to_string(spaces.size()) +
                                      " characters for " + std::to_string(k) + " classes");

  const std::size_t id_class = static_cast<std::size_t>(g.class_of(g.identity()));
  for (auto& space : spaces) {
    std::vector<u64> omega = space[0];
    if (omega[id_class] == 0) throw Error("central character vanishes at the identity");
    u64 s = inv_mod(omega[id_class], p);
    for (auto& x : omega) x = x * s % p;
    u64 sum = 0;
    for (std::size_t i = 0; i < k; ++i) {
      std::size_t inv_class = static_cast<std::size_t>(g.class_of(g.inv(g.class_rep(i))));
      sum = (sum + omega[i] * omega[inv_class] % p * inv_mod(g.class_size(i) % p, p)) % p;
    }
    u64 deg_sq = (n % p) * inv_mod(sum, p) % p;
    u64 degree = 0;
    for (u64 d = 1; d * d <= n; ++d)
      if (d * d % p == deg_sq) degree = d;
    if (degree == 0) throw Error("could not recover a character degree");
    std::vector<u64> values(k);
    for (std::size_t i = 0; i < k; ++i) values[i] = omega[i] * degree % p * inv_mod(g.class_size(i) % p, p) % p;
    out.degrees.push_back(degree);
    out.values.push_back(std::move(values));
  }
  return out;
}

}  // namespace stdual::detail
