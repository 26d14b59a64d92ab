#pragma once

#include <cstdint>
#include <string>

#include "plancalc/pivotal.hpp"

namespace plancalc {

struct RenderOptions {
  double unit = 30;   // strand spacing and slice height, px
  bool labels = true;
};

// Static SVG of a slice plan. Elements appear in slice order, strands left to
// right within a slice, so equal plans give equal element lists.
std::string render_svg(const SlicePlan& plan, const RenderOptions& opt = {});
// Renders the standard form that pivotal evaluation uses for T.
std::string render_svg(const PlanarTangle& T, std::uint64_t seed = 0, const RenderOptions& opt = {});

}  // namespace plancalc
