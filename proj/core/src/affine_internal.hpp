#pragma once

#include <functional>
#include <vector>

#include "plancalc/affine.hpp"

namespace plancalc::detail {

// Computed levels within budget; a level past the budget inherits the previous
// dimension when the wrap algebra is saturated, else the walk stops there.
std::vector<HomLevel> walk_levels(const AffineCategory& A, Color outer, Color inner,
                                  const std::function<int(int)>& computed);

}  // namespace plancalc::detail
