#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "kcenter/approx/common.hpp"
#include "kcenter/exact/oracle.hpp"
#include "kcenter/graph/distance.hpp"

namespace kcenter {

/// Farthest-first traversal from vertex 0. Radius <= 2 R_k on connected graphs.
inline CenterSolution gonzalez_2approx(const Graph& g, std::size_t k) {
  require(k >= 1, ErrorCode::InvalidArgument, "k must be >= 1");
  const std::size_t n = g.n();
  require(n >= 1, ErrorCode::InvalidInstance, "empty graph");
  if (k >= n) return {VertexSet::full(n), 0};
  std::vector<Vertex> centers{0};
  std::vector<Dist> d = shortest_paths(g, 0).dist;
  const VertexSet everything = VertexSet::full(n);
  while (centers.size() < k) {
    const Vertex far = farthest_from_set(d, everything);
    if (d[far] == 0) break;
    centers.push_back(far);
    const auto row = shortest_paths(g, far).dist;
    for (std::size_t v = 0; v < n; ++v) d[v] = std::min(d[v], row[v]);
  }
  VertexSet set = detail::pad_centers(n, centers, k);
  return {set, row_max(d)};
}

}  // namespace kcenter
