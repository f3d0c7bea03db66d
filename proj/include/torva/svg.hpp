#pragma once

#include <string>

#include "torva/fan.hpp"

namespace torva {

// Deterministic SVG picture of the level-r slice of a rank-2 fan: one
// polygon per nonempty cone slice, clipped to the square viewport
// [-B, B]^2 with B = 2 * max(1, largest vertex coordinate), plus axes and
// exact coordinate labels at the slice vertices.  Throws DomainError for
// rank != 2 or r < 0.
std::string render_slice_svg(const GammaFan& fan, const Scalar& level);

}  // namespace torva
