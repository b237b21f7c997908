#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "kcenter/core/bitset.hpp"
#include "kcenter/core/error.hpp"
#include "kcenter/gadget/setcover.hpp"
#include "kcenter/graph/graph.hpp"

namespace kcenter {

inline constexpr std::uint64_t kDefaultGadgetVertexBudget = 5'000'000;

enum class Role { A, B, Hub, Path, Tail };

constexpr std::string_view to_string(Role r) {
  switch (r) {
    case Role::A: return "A";
    case Role::B: return "B";
    case Role::Hub: return "hub";
    case Role::Path: return "path";
    case Role::Tail: return "tail";
  }
  return "?";
}

struct VertexRole {
  Role role = Role::Path;
  std::optional<std::uint32_t> source;  // a-id for A, b-id for B and Tail
  std::optional<std::uint32_t> gadget;  // owning gadget, absent for tails
};

/// One copy of the base gadget inside a generated graph.
struct GadgetBlock {
  std::vector<Vertex> a_vertex;
  std::vector<Vertex> b_vertex;
  Vertex hub = 0;
  std::size_t length = 0;  // L
  std::size_t p = 0;       // recursion parameter (0 for base / simple)
};

enum class GadgetKind { Base, Simple, Recursive };

constexpr std::string_view to_string(GadgetKind k) {
  switch (k) {
    case GadgetKind::Base: return "base";
    case GadgetKind::Simple: return "simple";
    case GadgetKind::Recursive: return "recursive";
  }
  return "?";
}

struct GadgetOutput {
  Graph graph;
  SetCoverInstance source;
  GadgetKind kind = GadgetKind::Base;
  std::vector<GadgetBlock> gadgets;
  std::vector<VertexRole> roles;
  std::size_t t = 0;
  std::size_t ell = 0;
  std::size_t k = 0;  // declared cover size
  Radius predicted_yes_radius = 0;
  std::size_t center_budget = 0;
};

struct GadgetCounts {
  std::size_t f = 0;
  std::vector<std::size_t> g_table;  // g(0..2t)
  std::vector<std::size_t> h_table;  // h(0..2t); h(0) unused
};

/// g(T) = 1 + sum_{odd j >= 3} g(floor(T/j)), g(0) = 0.
inline std::vector<std::size_t> gadget_g_table(std::size_t T) {
  std::vector<std::size_t> g(T + 1, 0);
  for (std::size_t x = 1; x <= T; ++x) {
    g[x] = 1;
    for (std::size_t j = 3; j <= x; j += 2) g[x] += g[x / j];
  }
  return g;
}

inline GadgetCounts count_gadgets(std::size_t t) {
  require(t >= 1, ErrorCode::InvalidArgument, "t must be >= 1");
  GadgetCounts out;
  out.g_table = gadget_g_table(2 * t);
  out.h_table.assign(2 * t + 1, 0);
  for (std::size_t p = 2 * t; p >= 1; --p) {
    std::size_t h = 1;
    for (std::size_t q = 1; q <= (2 * t - p) / (2 * p); ++q) h += out.h_table[(2 * q + 1) * p];
    out.h_table[p] = h;
  }
  out.f = out.h_table[1];
  return out;
}

namespace detail {

class GadgetAssembler {
 public:
  GadgetAssembler(const SetCoverInstance& sc, std::uint64_t vertex_budget) : sc_(sc), builder_(0), budget_(vertex_budget) {}

  GadgetBlock add_base(std::size_t L, std::size_t p) {
    require(L >= 1, ErrorCode::InvalidArgument, "gadget length must be >= 1");
    const auto gid = static_cast<std::uint32_t>(blocks_.size());
    GadgetBlock blk;
    blk.length = L;
    blk.p = p;
    for (std::uint32_t a = 0; a < sc_.a_count; ++a) blk.a_vertex.push_back(fresh({Role::A, a, gid}));
    for (std::uint32_t b = 0; b < sc_.b_count; ++b) blk.b_vertex.push_back(fresh({Role::B, b, gid}));
    blk.hub = fresh({Role::Hub, std::nullopt, gid});
    for (auto [a, b] : sc_.edges()) {
      auto internal = path(blk.a_vertex[a], blk.b_vertex[b], L, gid);
      ab_paths_[key(gid, a, b)] = std::move(internal);
    }
    for (std::uint32_t a = 0; a < sc_.a_count; ++a) path(blk.a_vertex[a], blk.hub, L, gid);
    blocks_.push_back(blk);
    return blk;
  }

  /// Vertex at distance j from the A-end of the (a, b) path of gadget gid (0 < j < L).
  Vertex ab_node(std::uint32_t gid, std::uint32_t a, std::uint32_t b, std::size_t j) const {
    const auto& internal = ab_paths_.at(key(gid, a, b));
    return internal.at(j - 1);
  }

  std::vector<Vertex> path(Vertex u, Vertex v, std::size_t len, std::optional<std::uint32_t> gid,
                           Role role = Role::Path, std::optional<std::uint32_t> source = std::nullopt) {
    reserve(len - 1);
    auto internal = builder_.add_path(u, v, len);
    for (std::size_t i = 0; i < internal.size(); ++i) roles_.push_back({role, source, gid});
    return internal;
  }

  /// Appends a len-edge path hanging off `u`; returns its len new vertices.
  std::vector<Vertex> tail(Vertex u, std::size_t len, std::uint32_t source) {
    std::vector<Vertex> out;
    Vertex prev = u;
    for (std::size_t i = 0; i < len; ++i) {
      Vertex x = fresh({Role::Tail, source, std::nullopt});
      builder_.add_edge(prev, x);
      out.push_back(x);
      prev = x;
    }
    return out;
  }

  std::size_t gadget_count() const { return blocks_.size(); }

  GadgetOutput finish() && {
    GadgetOutput out;
    out.graph = builder_.build();
    out.source = sc_;
    out.gadgets = std::move(blocks_);
    out.roles = std::move(roles_);
    return out;
  }

 private:
  static std::uint64_t key(std::uint32_t gid, std::uint32_t a, std::uint32_t b) {
    return (std::uint64_t{gid} << 42) | (std::uint64_t{a} << 21) | b;
  }

  void reserve(std::size_t extra) {
    require(builder_.n() + extra <= budget_, ErrorCode::BudgetExceeded,
            "gadget graph exceeds vertex budget " + std::to_string(budget_));
  }

  Vertex fresh(VertexRole r) {
    reserve(1);
    roles_.push_back(r);
    return builder_.add_vertex();
  }

  const SetCoverInstance& sc_;
  GraphBuilder builder_;
  std::uint64_t budget_;
  std::vector<GadgetBlock> blocks_;
  std::vector<VertexRole> roles_;
  std::unordered_map<std::uint64_t, std::vector<Vertex>> ab_paths_;
};

}  // namespace detail

/// Gad(A, B, c, L): every (a, b) in E and every (a, c) becomes an L-edge path.
inline GadgetOutput build_base_gadget(const SetCoverInstance& sc, std::size_t L,
                                      std::uint64_t vertex_budget = kDefaultGadgetVertexBudget) {
  detail::GadgetAssembler as(sc, vertex_budget);
  as.add_base(L, 0);
  GadgetOutput out = std::move(as).finish();
  out.kind = GadgetKind::Base;
  return out;
}

/// Base gadget at L = l plus an l-edge tail on every B vertex.
inline GadgetOutput gen_simple_lb(const SetCoverInstance& sc, std::size_t k, std::size_t l,
                                  std::uint64_t vertex_budget = kDefaultGadgetVertexBudget) {
  require(l >= 1, ErrorCode::InvalidArgument, "l must be >= 1");
  detail::GadgetAssembler as(sc, vertex_budget);
  const GadgetBlock blk = as.add_base(l, 0);
  for (std::uint32_t b = 0; b < sc.b_count; ++b) as.tail(blk.b_vertex[b], l, b);
  GadgetOutput out = std::move(as).finish();
  out.kind = GadgetKind::Simple;
  out.ell = l;
  out.k = k;
  out.predicted_yes_radius = static_cast<Radius>(2 * l);
  out.center_budget = k;
  return out;
}

/// Recursive construction: Recurse(1) plus l-edge tails on the top-level B copies.
/// Vertex order follows recursion pre-order; connection paths of a child follow its subtree.
inline GadgetOutput gen_recursive_lb(const SetCoverInstance& sc, std::size_t t, std::size_t l, std::size_t k,
                                     std::uint64_t vertex_budget = kDefaultGadgetVertexBudget) {
  require(t >= 1 && l >= 1, ErrorCode::InvalidArgument, "t and l must be >= 1");
  detail::GadgetAssembler as(sc, vertex_budget);
  const auto edges = sc.edges();

  auto recurse = [&](auto&& self, std::size_t p) -> GadgetBlock {
    const std::size_t L = (2 * t + 1 - p) * l;
    const GadgetBlock top = as.add_base(L, p);
    const auto gid = static_cast<std::uint32_t>(as.gadget_count() - 1);
    for (std::size_t q = 1; q <= (2 * t - p) / (2 * p); ++q) {
      const GadgetBlock child = self(self, (2 * q + 1) * p);
      const std::size_t len = 2 * q * p * l;
      const std::size_t j = (2 * t + 1 - p - 2 * q * p) * l;
      for (auto [a, b] : edges) as.path(as.ab_node(gid, a, b, j), child.b_vertex[b], len, gid);
    }
    return top;
  };
  const GadgetBlock root = recurse(recurse, 1);
  for (std::uint32_t b = 0; b < sc.b_count; ++b) as.tail(root.b_vertex[b], l, b);

  GadgetOutput out = std::move(as).finish();
  out.kind = GadgetKind::Recursive;
  out.t = t;
  out.ell = l;
  out.k = k;
  out.predicted_yes_radius = static_cast<Radius>((2 * t + 1) * l);
  out.center_budget = count_gadgets(t).f * (k + 1);
  return out;
}

/// Cover copies in every gadget, plus every hub for the recursive construction.
inline VertexSet yes_case_centers(const GadgetOutput& gout, const std::vector<std::uint32_t>& cover) {
  require(is_set_cover(gout.source, cover), ErrorCode::InvalidCover, "given a-ids do not cover every b");
  VertexSet out(gout.graph.n());
  for (const GadgetBlock& blk : gout.gadgets) {
    for (auto a : cover) out.insert(blk.a_vertex[a]);
    if (gout.kind != GadgetKind::Simple) out.insert(blk.hub);
  }
  return out;
}

inline void write_roles(std::ostream& out, const GadgetOutput& gout) {
  for (std::size_t v = 0; v < gout.roles.size(); ++v) {
    const auto& r = gout.roles[v];
    out << v << ' ' << to_string(r.role) << ' ';
    if (r.source) out << *r.source; else out << '-';
    out << ' ';
    if (r.gadget) out << *r.gadget; else out << '-';
    out << '\n';
  }
}

inline std::string manifest_line(const GadgetOutput& gout) {
  return "yes_radius=" + std::to_string(gout.predicted_yes_radius) +
         " center_budget=" + std::to_string(gout.center_budget) + " kind=" + std::string(to_string(gout.kind)) +
         " t=" + std::to_string(gout.t) + " ell=" + std::to_string(gout.ell) + " k=" + std::to_string(gout.k) +
         " gadgets=" + std::to_string(gout.gadgets.size());
}

}  // namespace kcenter
