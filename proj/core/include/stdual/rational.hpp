#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace stdual {

using Rational = mpq_class;
using Integer = mpz_class;
using Vector = std::vector<Rational>;

// "a" or "a/b" in lowest terms.
std::string to_string(const Rational& q);

// Accepts "a", "-a", "a/b"; throws InvalidInput otherwise.
Rational parse_rational(std::string_view text);

bool is_zero(const Vector& v);

// Dot product; sizes must agree.
Rational dot(const Vector& a, const Vector& b);

// Rescales v by a positive rational so that its entries are coprime integers.
// The zero vector is returned unchanged.
Vector primitive(const Vector& v);

std::string to_string(const Vector& v);

}  // namespace stdual
