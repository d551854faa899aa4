#pragma once

#include <compare>
#include <string>
#include <vector>

#include "stdual/rational.hpp"

namespace stdual {

// Largest conductor arithmetic will lift to.
inline constexpr int kMaxConductor = 1024;

// Exact element of the cyclotomic field Q(zeta_m).
//
// Stored as a residue polynomial modulo x^m - 1 (coefficient k multiplies
// zeta_m^k). The canonical representative is the remainder modulo the m-th
// cyclotomic polynomial, so two values of equal conductor are equal exactly
// when their coefficient vectors agree; values of different conductor are
// compared after lifting both to the lcm. A value that is rational is always
// held at conductor 1.
class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(Rational(0)) {}
  Cyclotomic(const Rational& q);  // NOLINT: implicit on purpose
  Cyclotomic(long q) : Cyclotomic(Rational(q)) {}  // NOLINT
  Cyclotomic(int q) : Cyclotomic(Rational(q)) {}   // NOLINT

  // coeffs.size() == conductor.
  Cyclotomic(int conductor, std::vector<Rational> coeffs);

  // zeta_m^k.
  static Cyclotomic root_of_unity(long k, int m);
  // exp(2 pi i q) for rational q.
  static Cyclotomic root_of_unity(const Rational& q);

  int conductor() const { return m_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_rational() const { return m_ == 1; }
  bool is_zero() const { return m_ == 1 && c_[0] == 0; }
  Rational to_rational() const;  // throws if not rational

  // Same value written at conductor n (n must be a multiple of conductor()).
  Cyclotomic lift(int n) const;

  // Complex conjugate (zeta -> zeta^-1).
  Cyclotomic conj() const;

  // If *this is a root of unity exp(2 pi i q), returns q in [0, 1).
  bool root_of_unity_exponent(Rational& q) const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  Cyclotomic& operator/=(const Rational& q);

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend std::strong_ordering operator<=>(const Cyclotomic& a, const Cyclotomic& b);

  // Polynomial in zeta_m, e.g. "-1/2 + z4^3".
  std::string str() const;

 private:
  void canonicalize();

  int m_ = 1;
  std::vector<Rational> c_;
};

// Coefficients of the m-th cyclotomic polynomial, constant term first.
const std::vector<Integer>& cyclotomic_polynomial(int m);

int lcm_conductor(int a, int b);

}  // namespace stdual
