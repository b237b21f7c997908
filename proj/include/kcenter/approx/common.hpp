#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "kcenter/approx/config.hpp"
#include "kcenter/boolcover/boolcover.hpp"
#include "kcenter/core/bitset.hpp"
#include "kcenter/exact/oracle.hpp"
#include "kcenter/graph/distance.hpp"

namespace kcenter::detail {

/// Adds the smallest unused ids until `centers` has min(k, n) distinct vertices.
inline VertexSet pad_centers(std::size_t n, std::span<const Vertex> centers, std::size_t k) {
  VertexSet out = VertexSet::of(n, centers);
  const std::size_t want = std::min(k, n);
  for (Vertex v = 0; v < n && out.size() < want; ++v) out.insert(v);
  return out;
}

/// Pads, computes the exact cover radius and accepts only if it is within `limit`.
inline std::optional<Covered> try_cover(const Graph& g, std::span<const Vertex> centers, std::size_t k, Radius limit,
                                        CoverSource via) {
  VertexSet set = pad_centers(g.n(), centers, k);
  if (set.empty()) return std::nullopt;
  const Dist r = cover_radius(g, set);
  if (!within(r, limit)) return std::nullopt;
  return Covered{std::move(set), r, via};
}

inline std::vector<Vertex> with(std::span<const Vertex> base, std::span<const Vertex> extra) {
  std::vector<Vertex> out(base.begin(), base.end());
  out.insert(out.end(), extra.begin(), extra.end());
  return out;
}

/// d(v, C); every entry kUnreachable when C is empty, matching B(empty, r) = empty.
inline std::vector<Dist> dist_to(const Graph& g, std::span<const Vertex> C) {
  if (C.empty()) return std::vector<Dist>(g.n(), kUnreachable);
  return multi_source_dist(g, VertexSet::of(g.n(), C));
}

/// B(C, r)^c as a vertex list in id order, given d(., C).
inline std::vector<Vertex> outside_ball(std::span<const Dist> dist_to_c, Radius r) {
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < dist_to_c.size(); ++v) {
    if (!within(dist_to_c[v], r)) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

inline std::vector<Vertex> intersect_lists(const VertexSet& a, std::span<const Vertex> b) {
  std::vector<Vertex> out;
  for (Vertex v : b) {
    if (a.contains(v)) out.push_back(v);
  }
  return out;
}

/// Closest `size` vertices to the vertex of `region` farthest from the sample.
inline std::vector<Vertex> neighborhood_of_farthest(const Graph& g, std::span<const Dist> dist_to_sample,
                                                    std::span<const Vertex> region, std::size_t size) {
  const Vertex w = farthest_from_set(dist_to_sample, VertexSet::of(g.n(), region));
  return closest_p_nodes(g, w, size).members();
}

/// First tuple over `groups` whose balls of radius r cover Z.
inline std::optional<std::vector<Vertex>> cover_tuple(DistanceTable& table, std::span<const std::vector<Vertex>> groups,
                                                      std::span<const Vertex> Z, Radius r, std::uint64_t budget) {
  std::vector<std::vector<UncoveredRow>> rows;
  rows.reserve(groups.size());
  // Identical groups share one mask table.
  std::vector<std::size_t> slot(groups.size());
  for (std::size_t p = 0; p < groups.size(); ++p) {
    std::size_t q = 0;
    while (q < p && groups[q] != groups[p]) ++q;
    if (q < p) {
      slot[p] = slot[q];
    } else {
      slot[p] = rows.size();
      rows.push_back(uncovered_mask(table, groups[p], Z, r));
    }
  }
  std::vector<std::span<const UncoveredRow>> spans;
  spans.reserve(groups.size());
  for (std::size_t p = 0; p < groups.size(); ++p) spans.emplace_back(rows[slot[p]]);
  return exists_cover_tuple(std::span<const std::span<const UncoveredRow>>(spans), Z.size(), budget);
}

inline std::vector<Vertex> all_vertices(std::size_t n) {
  std::vector<Vertex> out(n);
  for (std::size_t v = 0; v < n; ++v) out[v] = static_cast<Vertex>(v);
  return out;
}

inline void require_unweighted(const Graph& g, const char* who) {
  require(!g.weighted(), ErrorCode::InvalidArgument, std::string(who) + " requires an unweighted graph");
}

}  // namespace kcenter::detail
