#include "parityproj/rng.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace parityproj {

std::uint64_t draw_geometric(SplitMix64& rng, double q) {
  if (!(q > 0.0 && q <= 1.0)) {
    throw std::invalid_argument("geometric draw needs q in (0, 1]");
  }
  if (q == 1.0) return 1;
  const double u = rng.uniform01();
  const double steps = std::floor(std::log1p(-u) / std::log1p(-q));
  if (!(steps >= 0.0)) return 1;
  if (steps >= 9.0e18) return std::numeric_limits<std::uint64_t>::max();
  return 1 + static_cast<std::uint64_t>(steps);
}

}  // namespace parityproj
