#include "stdual/cyclotomic.hpp"

#include <mutex>
#include <numeric>
#include <sstream>

#include "stdual/errors.hpp"

namespace stdual {

namespace {

std::vector<Integer> poly_div_exact(std::vector<Integer> num, const std::vector<Integer>& den) {
  // den is monic.
  const std::size_t dn = den.size() - 1;
  std::vector<Integer> q(num.size() - dn);
  for (std::size_t k = num.size(); k-- > dn;) {
    Integer c = num[k];
    q[k - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[k - dn + j] -= c * den[j];
  }
  return q;
}

}  // namespace

const std::vector<Integer>& cyclotomic_polynomial(int m) {
  if (m < 1 || m > kMaxConductor) throw ResourceLimit("conductor " + std::to_string(m) + " out of range");
  static std::mutex mu;
  static std::vector<std::vector<Integer>> cache(kMaxConductor + 1);
  std::lock_guard lock(mu);
  if (!cache[m].empty()) return cache[m];
  std::vector<Integer> p(m + 1);
  p[0] = -1;
  p[m] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d) continue;
    if (cache[d].empty()) {
      // Proper divisors of d also divide m and are visited earlier in this loop.
      std::vector<Integer> pd(d + 1);
      pd[0] = -1;
      pd[d] = 1;
      for (int e = 1; e < d; ++e)
        if (d % e == 0) pd = poly_div_exact(pd, cache[e]);
      cache[d] = pd;
    }
    p = poly_div_exact(p, cache[d]);
  }
  cache[m] = p;
  return cache[m];
}

int lcm_conductor(int a, int b) {
  long l = std::lcm(static_cast<long>(a), static_cast<long>(b));
  if (l > kMaxConductor) throw ResourceLimit("cyclotomic conductor lcm exceeds " + std::to_string(kMaxConductor));
  return static_cast<int>(l);
}

Cyclotomic::Cyclotomic(const Rational& q) : m_(1), c_{q} {}

Cyclotomic::Cyclotomic(int conductor, std::vector<Rational> coeffs) : m_(conductor), c_(std::move(coeffs)) {
  if (m_ < 1 || m_ > kMaxConductor) throw ResourceLimit("conductor out of range");
  if (static_cast<int>(c_.size()) != m_) throw InvalidInput("cyclotomic coefficient vector must have conductor length");
  canonicalize();
}

Cyclotomic Cyclotomic::root_of_unity(long k, int m) {
  if (m < 1) throw InvalidInput("root of unity order must be positive");
  std::vector<Rational> c(m);
  long r = ((k % m) + m) % m;
  c[static_cast<std::size_t>(r)] = 1;
  return Cyclotomic(m, std::move(c));
}

Cyclotomic Cyclotomic::root_of_unity(const Rational& q) {
  Rational r = q;
  Integer n = r.get_num(), d = r.get_den();
  if (d > kMaxConductor) throw ResourceLimit("root of unity order exceeds max conductor");
  Integer k = n % d;
  if (k < 0) k += d;
  return root_of_unity(k.get_si(), static_cast<int>(d.get_si()));
}

Rational Cyclotomic::to_rational() const {
  if (!is_rational()) throw InvalidInput("cyclotomic value " + str() + " is not rational");
  return c_[0];
}

void Cyclotomic::canonicalize() {
  const auto& phi = cyclotomic_polynomial(m_);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t k = c_.size(); k-- > deg;) {
    if (c_[k] == 0) continue;
    Rational f = c_[k];
    for (std::size_t j = 0; j <= deg; ++j) c_[k - deg + j] -= f * Rational(phi[j]);
  }
  bool rational = true;
  for (std::size_t k = 1; k < c_.size(); ++k)
    if (c_[k] != 0) rational = false;
  if (rational && m_ != 1) {
    Rational q = c_[0];
    m_ = 1;
    c_.assign(1, q);
  }
}

Cyclotomic Cyclotomic::lift(int n) const {
  if (n % m_ != 0) throw InvalidInput("lift target must be a multiple of the conductor");
  if (n == m_) return *this;
  std::vector<Rational> c(n);
  const int step = n / m_;
  for (int k = 0; k < m_; ++k) c[k * step] = c_[k];
  Cyclotomic out;
  out.m_ = n;
  out.c_ = std::move(c);
  return out;  // deliberately not canonicalized: used for arithmetic only
}

Cyclotomic Cyclotomic::conj() const {
  if (m_ == 1) return *this;
  std::vector<Rational> c(m_);
  for (int k = 0; k < m_; ++k) c[(m_ - k) % m_] = c_[k];
  return Cyclotomic(m_, std::move(c));
}

bool Cyclotomic::root_of_unity_exponent(Rational& q) const {
  // For odd m the roots of unity in Q(zeta_m) are the 2m-th ones.
  const int n = (m_ % 2 == 1) ? 2 * m_ : m_;
  for (int k = 0; k < n; ++k) {
    if (*this == root_of_unity(k, n)) {
      q = Rational(k, n);
      q.canonicalize();
      return true;
    }
  }
  return false;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& x : out.c_) x = -x;
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.m_ == 1) {
    c_[0] += o.c_[0];
    if (m_ != 1) canonicalize();
    return *this;
  }
  int n = lcm_conductor(m_, o.m_);
  if (n != m_) *this = lift(n);
  const int step = n / o.m_;
  for (int k = 0; k < o.m_; ++k) c_[k * step] += o.c_[k];
  canonicalize();
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (o.m_ == 1) {
    for (auto& x : c_) x *= o.c_[0];
    if (o.c_[0] == 0) *this = Cyclotomic(0);
    return *this;
  }
  if (m_ == 1) {
    Rational q = c_[0];
    *this = o;
    for (auto& x : c_) x *= q;
    if (q == 0) *this = Cyclotomic(0);
    return *this;
  }
  int n = lcm_conductor(m_, o.m_);
  Cyclotomic a = lift(n), b = o.lift(n);
  std::vector<Rational> c(n);
  for (int i = 0; i < n; ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (b.c_[j] == 0) continue;
      c[(i + j) % n] += a.c_[i] * b.c_[j];
    }
  }
  m_ = n;
  c_ = std::move(c);
  canonicalize();
  return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Rational& q) {
  if (q == 0) throw InvalidInput("division by zero");
  for (auto& x : c_) x /= q;
  return *this;
}

namespace {

// Canonical coefficient vectors of a and b at a common conductor.
std::pair<std::vector<Rational>, std::vector<Rational>> common(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor() == b.conductor()) return {a.coeffs(), b.coeffs()};
  int n = lcm_conductor(a.conductor(), b.conductor());
  Cyclotomic la = a.lift(n), lb = b.lift(n);
  // Re-canonicalize the lifted residues at conductor n.
  Cyclotomic ca(n, la.coeffs()), cb(n, lb.coeffs());
  auto va = ca.coeffs(), vb = cb.coeffs();
  va.resize(n);
  vb.resize(n);
  return {va, vb};
}

}  // namespace

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.m_ == b.m_) return a.c_ == b.c_;
  // Canonical forms at different conductors: rational values live at
  // conductor 1, so a mismatch here can still hide equality only if neither
  // is rational.
  if (a.m_ == 1 || b.m_ == 1) return false;
  auto [va, vb] = common(a, b);
  return va == vb;
}

std::strong_ordering operator<=>(const Cyclotomic& a, const Cyclotomic& b) {
  auto [va, vb] = common(a, b);
  const std::size_t n = std::max(va.size(), vb.size());
  va.resize(n);
  vb.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    int c = cmp(va[k], vb[k]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string Cyclotomic::str() const {
  if (m_ == 1) return to_string(c_[0]);
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < m_; ++k) {
    const Rational& q = c_[k];
    if (q == 0) continue;
    Rational mag = abs(q);
    if (first) {
      if (q < 0) os << '-';
    } else {
      os << (q < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << to_string(mag);
      continue;
    }
    if (mag != 1) os << to_string(mag) << '*';
    os << 'z' << m_;
    if (k != 1) os << '^' << k;
  }
  return os.str();
}

}  // namespace stdual
