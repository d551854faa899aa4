#pragma once

// Character values of a finite group modulo a prime p = 1 (mod exp(G)),
// computed by splitting the class algebra over F_p (Dixon-Schneider).

#include <cstdint>
#include <vector>

#include "stdual/group.hpp"

namespace stdual::detail {

struct ModularTable {
  std::uint64_t p = 0;
  std::uint64_t zeta = 0;  // image of exp(2 pi i / exp(G)) in F_p
  std::vector<std::uint64_t> degrees;
  std::vector<std::vector<std::uint64_t>> values;  // [character][class]
};

ModularTable modular_character_table(const FiniteGroup& g);

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

}  // namespace stdual::detail
