#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <queue>
#include <span>
#include <thread>
#include <utility>
#include <vector>

#include "kcenter/core/bitset.hpp"
#include "kcenter/core/error.hpp"
#include "kcenter/core/types.hpp"
#include "kcenter/graph/graph.hpp"

namespace kcenter {

struct DistRow {
  Vertex source = 0;
  std::vector<Dist> dist;
};

namespace detail {

inline void check_source(const Graph& g, Vertex s) {
  require(s < g.n(), ErrorCode::InvalidArgument,
          "source " + std::to_string(s) + " out of range for n=" + std::to_string(g.n()));
}

inline Dist add_dist(Dist d, Dist w) {
  return d > kUnreachable - 1 - w ? kUnreachable - 1 : d + w;
}

/// BFS from every vertex in `sources` at once; returns d(v, sources).
inline std::vector<Dist> bfs_multi(const Graph& g, std::span<const Vertex> sources) {
  std::vector<Dist> dist(g.n(), kUnreachable);
  std::vector<Vertex> queue;
  queue.reserve(g.n());
  for (Vertex s : sources) {
    if (dist[s] != 0) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex v : g.neighbors(u)) {
      if (dist[v] == kUnreachable) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

inline std::vector<Dist> dijkstra_multi(const Graph& g, std::span<const Vertex> sources) {
  using Item = std::pair<Dist, Vertex>;
  std::vector<Dist> dist(g.n(), kUnreachable);
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  for (Vertex s : sources) {
    dist[s] = 0;
    pq.push({0, s});
  }
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (d != dist[u]) continue;
    auto nb = g.neighbors(u);
    auto ws = g.weights(u);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      const Dist nd = add_dist(d, ws[i]);
      if (nd < dist[nb[i]]) {
        dist[nb[i]] = nd;
        pq.push({nd, nb[i]});
      }
    }
  }
  return dist;
}

}  // namespace detail

inline DistRow bfs(const Graph& g, Vertex source) {
  detail::check_source(g, source);
  require(!g.weighted(), ErrorCode::InvalidArgument, "bfs requires an unweighted graph (M = 1)");
  const Vertex src[] = {source};
  return {source, detail::bfs_multi(g, src)};
}

inline DistRow dijkstra(const Graph& g, Vertex source) {
  detail::check_source(g, source);
  const Vertex src[] = {source};
  return {source, detail::dijkstra_multi(g, src)};
}

/// BFS for unweighted graphs, Dijkstra otherwise.
inline DistRow shortest_paths(const Graph& g, Vertex source) {
  return g.weighted() ? dijkstra(g, source) : bfs(g, source);
}

/// d(v, sources) for every v, in a single traversal.
inline std::vector<Dist> multi_source_dist(const Graph& g, const VertexSet& sources) {
  require(!sources.empty(), ErrorCode::InvalidArgument, "multi_source_dist needs a source");
  require(sources.universe() == g.n(), ErrorCode::InvalidArgument, "source set universe mismatch");
  const auto src = sources.members();
  return g.weighted() ? detail::dijkstra_multi(g, src) : detail::bfs_multi(g, src);
}

/// One row per vertex. threads = 0 picks hardware concurrency.
inline std::vector<DistRow> all_pairs(const Graph& g, unsigned threads = 1) {
  const std::size_t n = g.n();
  std::vector<DistRow> rows(n);
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));
  auto work = [&](unsigned stripe) {
    for (std::size_t v = stripe; v < n; v += threads) rows[v] = shortest_paths(g, static_cast<Vertex>(v));
  };
  if (threads <= 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }
  return rows;
}

/// Lazily computed, memoized distance rows. Not safe for concurrent mutation.
class DistanceTable {
 public:
  explicit DistanceTable(const Graph& g) : g_(&g), rows_(g.n()) {}

  const Graph& graph() const noexcept { return *g_; }
  std::size_t n() const noexcept { return rows_.size(); }

  const std::vector<Dist>& row(Vertex v) {
    auto& r = rows_[v];
    if (r.empty()) r = shortest_paths(*g_, v).dist;
    return r;
  }
  Dist operator()(Vertex u, Vertex v) { return row(u)[v]; }

  void fill_all() {
    for (Vertex v = 0; v < n(); ++v) row(v);
  }
  std::size_t computed_rows() const {
    return static_cast<std::size_t>(std::count_if(rows_.begin(), rows_.end(), [](const auto& r) { return !r.empty(); }));
  }

 private:
  const Graph* g_;
  std::vector<std::vector<Dist>> rows_;
};

/// v in `restrict` maximizing dist_to_set[v]; kUnreachable is largest, ties to smallest id.
inline Vertex farthest_from_set(std::span<const Dist> dist_to_set, const VertexSet& restrict) {
  require(!restrict.empty(), ErrorCode::EmptyRegion, "farthest_from_set over an empty region");
  Vertex best = 0;
  bool found = false;
  restrict.bits().for_each_set([&](std::size_t i) {
    if (!found || dist_to_set[i] > dist_to_set[best]) {
      best = static_cast<Vertex>(i);
      found = true;
    }
  });
  return best;
}

/// The min(p, #reachable) vertices nearest to w. Unweighted graphs use BFS discovery order
/// (neighbors by id); weighted graphs order by (distance, id). Either way the set is
/// downward closed under distance from w.
inline VertexSet closest_p_nodes(const Graph& g, Vertex w, std::size_t p) {
  detail::check_source(g, w);
  require(p >= 1, ErrorCode::InvalidArgument, "closest_p_nodes needs p >= 1");
  VertexSet out(g.n());
  if (!g.weighted()) {
    std::vector<Vertex> queue{w};
    out.insert(w);
    for (std::size_t head = 0; head < queue.size() && out.size() < p; ++head) {
      for (Vertex v : g.neighbors(queue[head])) {
        if (out.size() >= p) break;
        if (!out.contains(v)) {
          out.insert(v);
          queue.push_back(v);
        }
      }
    }
    return out;
  }
  using Item = std::pair<Dist, Vertex>;
  std::vector<Dist> dist(g.n(), kUnreachable);
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[w] = 0;
  pq.push({0, w});
  while (!pq.empty() && out.size() < p) {
    auto [d, u] = pq.top();
    pq.pop();
    if (d != dist[u] || out.contains(u)) continue;
    out.insert(u);
    auto nb = g.neighbors(u);
    auto ws = g.weights(u);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      const Dist nd = detail::add_dist(d, ws[i]);
      if (nd < dist[nb[i]]) {
        dist[nb[i]] = nd;
        pq.push({nd, nb[i]});
      }
    }
  }
  return out;
}

inline std::size_t component_count(const Graph& g) {
  std::vector<char> seen(g.n(), 0);
  std::vector<Vertex> stack;
  std::size_t count = 0;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (seen[s]) continue;
    ++count;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex v : g.neighbors(u)) {
        if (!seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
      }
    }
  }
  return count;
}

/// Largest entry of a distance row (kUnreachable if any vertex is unreachable).
inline Dist row_max(std::span<const Dist> row) {
  return row.empty() ? 0 : *std::max_element(row.begin(), row.end());
}

inline Dist eccentricity(const Graph& g, Vertex v) { return row_max(shortest_paths(g, v).dist); }

/// {v : d(v, S) <= r}, given the row d(., S).
inline VertexSet ball_from_row(std::span<const Dist> dist_to_set, Radius r) {
  VertexSet out(dist_to_set.size());
  for (std::size_t v = 0; v < dist_to_set.size(); ++v) {
    if (within(dist_to_set[v], r)) out.insert(static_cast<Vertex>(v));
  }
  return out;
}

}  // namespace kcenter
