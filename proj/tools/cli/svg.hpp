#pragma once

#include <string>
#include <utility>
#include <vector>

#include "modhyp/arith.hpp"

namespace modhyp::cli {

/// Standalone SVG scatter of planar points mod n, origin at the bottom-left.
/// Each point is a <rect> or <circle> with class "pt".
std::string render_svg(const std::vector<std::pair<u64, u64>>& points, u64 n);

}  // namespace modhyp::cli
