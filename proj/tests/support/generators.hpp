#pragma once

// Seeded instance generators for property tests. Kept apart from the library's own generators
// so that a bug there cannot hide a bug elsewhere.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "kcenter/gadget/setcover.hpp"
#include "kcenter/graph/graph.hpp"

namespace gen {

using kcenter::Dist;
using kcenter::Graph;
using kcenter::GraphBuilder;
using kcenter::SetCoverInstance;
using kcenter::Vertex;
using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

/// Random labelled spanning tree plus each remaining pair with probability p.
inline Graph connected(Rng& rng, std::size_t n, double p, Dist max_weight = 1) {
  GraphBuilder b(n, max_weight);
  std::vector<std::vector<char>> used(n, std::vector<char>(n, 0));
  auto weight = [&] { return static_cast<Dist>(uniform(rng, 1, max_weight)); };
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::shuffle(order.begin(), order.end(), rng);
  for (std::size_t i = 1; i < n; ++i) {
    const Vertex u = order[i];
    const Vertex v = order[uniform(rng, 0, i - 1)];
    used[u][v] = used[v][u] = 1;
    b.add_edge(u, v, weight());
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!used[u][v] && coin(rng, p)) b.add_edge(u, v, weight());
    }
  }
  return b.build();
}

/// Plain G(n, p); may be disconnected.
inline Graph gnp(Rng& rng, std::size_t n, double p, Dist max_weight = 1) {
  GraphBuilder b(n, max_weight);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng, p)) b.add_edge(u, v, static_cast<Dist>(uniform(rng, 1, max_weight)));
    }
  }
  return b.build();
}

inline Graph cycle(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex v = 0; v < n; ++v) b.add_edge(v, static_cast<Vertex>((v + 1) % n));
  return b.build();
}

inline Graph path(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return b.build();
}

inline Graph grid(std::size_t w, std::size_t h) {
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

/// Every b gets each a with probability p, and at least one neighbor.
inline SetCoverInstance setcover(Rng& rng, std::size_t a, std::size_t b, double p) {
  SetCoverInstance sc;
  sc.a_count = a;
  sc.b_count = b;
  sc.adjacency.assign(b, {});
  for (std::size_t j = 0; j < b; ++j) {
    for (std::uint32_t i = 0; i < a; ++i) {
      if (coin(rng, p)) sc.adjacency[j].push_back(i);
    }
    if (sc.adjacency[j].empty()) sc.adjacency[j].push_back(static_cast<std::uint32_t>(uniform(rng, 0, a - 1)));
  }
  sc.normalize();
  return sc;
}

/// Instance with a planted cover {0, .., k-1} (shuffled into A) plus noise edges.
inline SetCoverInstance setcover_with_cover(Rng& rng, std::size_t a, std::size_t b, std::size_t k, double p,
                                            std::vector<std::uint32_t>& cover) {
  std::vector<std::uint32_t> ids(a);
  std::iota(ids.begin(), ids.end(), 0u);
  std::shuffle(ids.begin(), ids.end(), rng);
  cover.assign(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(k));
  std::sort(cover.begin(), cover.end());
  SetCoverInstance sc;
  sc.a_count = a;
  sc.b_count = b;
  sc.adjacency.assign(b, {});
  for (std::size_t j = 0; j < b; ++j) {
    auto& nb = sc.adjacency[j];
    nb.push_back(cover[uniform(rng, 0, k - 1)]);
    for (std::uint32_t i = 0; i < a; ++i) {
      if (i != nb.front() && coin(rng, p)) nb.push_back(i);
    }
  }
  sc.normalize();
  return sc;
}

}  // namespace gen
