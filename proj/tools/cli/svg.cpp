#include "cli/svg.hpp"

#include <sstream>

#include "modhyp/errors.hpp"

namespace modhyp::cli {

namespace {

// Below this modulus a unit square is too coarse to read, so points become dots.
constexpr u64 kDotThreshold = 64;

}  // namespace

std::string render_svg(const std::vector<std::pair<u64, u64>>& points, u64 n) {
  if (n < 2) throw InvalidArgument("render_svg: modulus must be >= 2");
  for (const auto& [x, y] : points)
    if (x < 1 || x >= n || y < 1 || y >= n) throw InvalidArgument("render_svg: coordinate outside [1, n)");

  std::ostringstream s;
  s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << n << ' ' << n << "\" width=\"512\" height=\"512\">\n"
    << "<rect x=\"0\" y=\"0\" width=\"" << n << "\" height=\"" << n
    << "\" fill=\"white\" stroke=\"black\" stroke-width=\"" << (n > kDotThreshold ? n / 256.0 : 0.05) << "\"/>\n"
    << "<g fill=\"black\">\n";
  const bool dots = n <= kDotThreshold;
  for (const auto& [x, y] : points) {
    // SVG y grows downward; flip so y increases upward. Point (x, y) occupies [x-1, x] x [y-1, y].
    const u64 top = n - y;
    if (dots)
      s << "<circle class=\"pt\" cx=\"" << x - 0.5 << "\" cy=\"" << top + 0.5 << "\" r=\"0.4\"/>\n";
    else
      s << "<rect class=\"pt\" x=\"" << x - 1 << "\" y=\"" << top << "\" width=\"1\" height=\"1\"/>\n";
  }
  s << "</g>\n</svg>\n";
  return s.str();
}

}  // namespace modhyp::cli
