#pragma once

#include <optional>
#include <vector>

#include "stdual/rational.hpp"

namespace stdual {

// Exact decision of whether the open cone {x : c . x > 0 for every c} is
// non-empty. Solved as phase one of the simplex method on c . x >= 1 with
// Bland's rule, over the rationals. Returns a witness x when feasible.
std::optional<Vector> strict_cone_point(const std::vector<Vector>& constraints, std::size_t dim);

inline bool strict_cone_feasible(const std::vector<Vector>& constraints, std::size_t dim) {
  return strict_cone_point(constraints, dim).has_value();
}

}  // namespace stdual
