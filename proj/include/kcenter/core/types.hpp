#pragma once

#include <cstdint>
#include <limits>

namespace kcenter {

using Vertex = std::uint32_t;

/// Shortest-path length. `kUnreachable` orders above every finite distance.
using Dist = std::uint32_t;
inline constexpr Dist kUnreachable = std::numeric_limits<Dist>::max();

/// Signed radius threshold; thresholds such as 2R - alpha or -1 are legal.
using Radius = std::int64_t;

constexpr bool within(Dist d, Radius r) noexcept {
  return d != kUnreachable && static_cast<Radius>(d) <= r;
}

}  // namespace kcenter
