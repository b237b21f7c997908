#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "kcenter/core/bitset.hpp"
#include "kcenter/core/error.hpp"
#include "kcenter/core/types.hpp"
#include "kcenter/graph/distance.hpp"
#include "kcenter/graph/graph.hpp"

namespace kcenter {

inline constexpr std::uint64_t kDefaultExactBudget = 100'000'000;

/// A center set together with its exact covering radius.
struct CenterSolution {
  VertexSet centers;
  Dist radius = kUnreachable;
};

/// max_v d(v, centers).
inline Dist cover_radius(const Graph& g, const VertexSet& centers) {
  require(!centers.empty(), ErrorCode::InvalidArgument, "cover_radius needs at least one center");
  return row_max(multi_source_dist(g, centers));
}

inline bool verify_cover(const Graph& g, const VertexSet& centers, Radius r) {
  if (centers.empty()) return g.n() == 0;
  return within(cover_radius(g, centers), r);
}

/// C(n, k), saturating at UINT64_MAX.
inline std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(acc);
}

/// Optimal k-center by branch-and-bound over k-subsets in lexicographic order.
/// Returns the lexicographically smallest optimal center set.
inline CenterSolution exact_k_radius(const Graph& g, std::size_t k,
                                     std::uint64_t budget = kDefaultExactBudget) {
  require(k >= 1, ErrorCode::InvalidArgument, "k must be >= 1");
  const std::size_t n = g.n();
  require(n >= 1, ErrorCode::InvalidInstance, "empty graph");
  k = std::min(k, n);
  if (k == n) return {VertexSet::full(n), 0};
  const std::uint64_t subsets = binomial_saturating(n, k);
  require(subsets <= budget, ErrorCode::BudgetExceeded,
          "C(" + std::to_string(n) + "," + std::to_string(k) + ") = " + std::to_string(subsets) +
              " subsets exceeds budget " + std::to_string(budget));

  std::vector<Dist> d(n * n);
  {
    auto rows = all_pairs(g);
    for (std::size_t u = 0; u < n; ++u) std::copy(rows[u].dist.begin(), rows[u].dist.end(), d.begin() + u * n);
  }
  // sufmin[i*n + v] = min over u >= i of d(u, v)
  std::vector<Dist> sufmin((n + 1) * n, kUnreachable);
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t v = 0; v < n; ++v) sufmin[i * n + v] = std::min(sufmin[(i + 1) * n + v], d[i * n + v]);
  }

  // Incumbent is compared as uint64 so that an all-unreachable cover still beats "none yet".
  std::uint64_t best = std::uint64_t{kUnreachable} + 1;
  std::vector<Vertex> best_set;
  std::vector<Vertex> chosen;
  std::vector<std::vector<Dist>> cur(k + 1, std::vector<Dist>(n, kUnreachable));

  auto search = [&](auto&& self, std::size_t depth, std::size_t next) -> void {
    if (best == 0) return;
    const auto& here = cur[depth];
    if (depth == k) {
      const Dist r = row_max(here);
      if (r < best) {
        best = r;
        best_set = chosen;
      }
      return;
    }
    for (std::size_t c = next; c + (k - depth) <= n; ++c) {
      // Lower bound on any completion that uses only vertices >= c.
      Dist lb = 0;
      for (std::size_t v = 0; v < n; ++v) lb = std::max(lb, std::min(here[v], sufmin[c * n + v]));
      if (lb >= best) return;
      auto& nxt = cur[depth + 1];
      const Dist* row = d.data() + c * n;
      for (std::size_t v = 0; v < n; ++v) nxt[v] = std::min(here[v], row[v]);
      chosen.push_back(static_cast<Vertex>(c));
      self(self, depth + 1, c + 1);
      chosen.pop_back();
      if (best == 0) return;
    }
  };
  search(search, 0, 0);
  return {VertexSet::of(n, best_set), static_cast<Dist>(best)};
}

}  // namespace kcenter
