#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "kcenter/core/error.hpp"
#include "kcenter/graph/distance.hpp"
#include "kcenter/graph/graph.hpp"

namespace kcenter {

inline Graph make_path(std::size_t n) {
  require(n >= 1, ErrorCode::InvalidArgument, "path needs n >= 1");
  GraphBuilder b(n);
  for (Vertex v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return b.build();
}

inline Graph make_cycle(std::size_t n) {
  require(n >= 3, ErrorCode::InvalidArgument, "cycle needs n >= 3");
  GraphBuilder b(n);
  for (Vertex v = 0; v < n; ++v) b.add_edge(v, static_cast<Vertex>((v + 1) % n));
  return b.build();
}

/// w x h grid, vertex (x, y) has id y * w + x.
inline Graph make_grid(std::size_t w, std::size_t h) {
  require(w >= 1 && h >= 1, ErrorCode::InvalidArgument, "grid needs positive sides");
  GraphBuilder b(w * h);
  for (std::size_t y = 0; y < h; ++y) {
    for (std::size_t x = 0; x < w; ++x) {
      const auto v = static_cast<Vertex>(y * w + x);
      if (x + 1 < w) b.add_edge(v, v + 1);
      if (y + 1 < h) b.add_edge(v, static_cast<Vertex>(v + w));
    }
  }
  return b.build();
}

/// K_{1,leaves} with hub 0.
inline Graph make_star(std::size_t leaves) {
  require(leaves >= 1, ErrorCode::InvalidArgument, "star needs a leaf");
  GraphBuilder b(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) b.add_edge(0, v);
  return b.build();
}

inline Graph make_complete(std::size_t n) {
  require(n >= 1, ErrorCode::InvalidArgument, "complete graph needs n >= 1");
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  }
  return b.build();
}

/// Induced subgraph on the largest connected component (ties: the one holding the smallest id),
/// vertices renumbered in increasing order.
inline Graph largest_component(const Graph& g) {
  const std::size_t n = g.n();
  std::vector<std::uint32_t> comp(n, UINT32_MAX);
  std::vector<std::size_t> sizes;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] != UINT32_MAX) continue;
    const auto id = static_cast<std::uint32_t>(sizes.size());
    std::vector<Vertex> stack{s};
    comp[s] = id;
    std::size_t size = 0;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      ++size;
      for (Vertex v : g.neighbors(u)) {
        if (comp[v] == UINT32_MAX) {
          comp[v] = id;
          stack.push_back(v);
        }
      }
    }
    sizes.push_back(size);
  }
  std::uint32_t best = 0;
  for (std::uint32_t c = 1; c < sizes.size(); ++c) {
    if (sizes[c] > sizes[best]) best = c;
  }
  std::vector<Vertex> remap(n, 0);
  std::size_t count = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (comp[v] == best) remap[v] = static_cast<Vertex>(count++);
  }
  GraphBuilder b(count, g.max_weight());
  for (const Edge& e : g.edges()) {
    if (comp[e.u] == best) b.add_edge(remap[e.u], remap[e.v], e.w);
  }
  return b.build();
}

/// G(n, p) with edge weights uniform in [1, max_weight]. Retries up to `retries` times for a
/// connected sample, then falls back to the largest component of the last draw.
inline Graph make_erdos_renyi(std::size_t n, double p, std::uint64_t seed, Dist max_weight = 1,
                              unsigned retries = 64) {
  require(n >= 1, ErrorCode::InvalidArgument, "G(n,p) needs n >= 1");
  require(p >= 0.0 && p <= 1.0, ErrorCode::InvalidArgument, "edge probability must lie in [0,1]");
  require(max_weight >= 1, ErrorCode::InvalidArgument, "weight bound must be >= 1");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::uniform_int_distribution<Dist> weight(1, max_weight);
  Graph last;
  for (unsigned attempt = 0; attempt <= retries; ++attempt) {
    GraphBuilder b(n, max_weight);
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (coin(rng)) b.add_edge(u, v, max_weight > 1 ? weight(rng) : 1);
      }
    }
    last = b.build();
    if (component_count(last) == 1) return last;
  }
  return largest_component(last);
}

/// Same graph shape with weights drawn uniformly from [1, max_weight].
inline Graph with_random_weights(const Graph& g, Dist max_weight, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Dist> weight(1, max_weight);
  GraphBuilder b(g.n(), max_weight);
  for (const Edge& e : g.edges()) b.add_edge(e.u, e.v, weight(rng));
  return b.build();
}

}  // namespace kcenter
