#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "kcenter/core/bitset.hpp"
#include "kcenter/core/error.hpp"
#include "kcenter/core/types.hpp"
#include "kcenter/graph/distance.hpp"

namespace kcenter {

inline constexpr std::uint64_t kDefaultTupleBudget = 50'000'000;

/// Bit j of `mask` is set iff `candidate` is farther than r from Z[j].
struct UncoveredRow {
  Vertex candidate = 0;
  Bitset mask;
};

/// `row_of(c)` must return an indexable distance row for candidate c.
template <typename RowOf>
std::vector<UncoveredRow> uncovered_mask(RowOf&& row_of, std::span<const Vertex> candidates,
                                         std::span<const Vertex> Z, Radius r) {
  std::vector<UncoveredRow> out;
  out.reserve(candidates.size());
  for (Vertex c : candidates) {
    const auto& row = row_of(c);
    UncoveredRow ur{c, Bitset(Z.size())};
    for (std::size_t j = 0; j < Z.size(); ++j) {
      if (!within(row[Z[j]], r)) ur.mask.set(j);
    }
    out.push_back(std::move(ur));
  }
  return out;
}

inline std::vector<UncoveredRow> uncovered_mask(DistanceTable& table, std::span<const Vertex> candidates,
                                                std::span<const Vertex> Z, Radius r) {
  return uncovered_mask([&](Vertex c) -> const std::vector<Dist>& { return table.row(c); }, candidates, Z, r);
}

/// One UncoveredRow per precomputed row; candidates are the row sources.
inline std::vector<UncoveredRow> uncovered_mask(std::span<const DistRow> rows, std::span<const Vertex> Z, Radius r) {
  std::vector<UncoveredRow> out;
  out.reserve(rows.size());
  for (const DistRow& row : rows) {
    const Vertex c[] = {row.source};
    auto one = uncovered_mask([&](Vertex) -> const std::vector<Dist>& { return row.dist; }, c, Z, r);
    out.push_back(std::move(one.front()));
  }
  return out;
}

namespace detail {

inline std::uint64_t product_saturating(std::span<const std::span<const UncoveredRow>> groups, std::size_t lo,
                                        std::size_t hi) {
  unsigned __int128 acc = 1;
  for (std::size_t i = lo; i < hi; ++i) {
    acc *= groups[i].size();
    if (acc > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(acc);
}

}  // namespace detail

/// First tuple (c_0, ..., c_{t-1}) in lexicographic position order, c_i drawn from groups[i],
/// whose masks AND to zero. Positions [0, ceil(t/2)) are streamed with a running AND and
/// tested against the materialized AND of every tuple over the remaining positions.
/// `z_size` is the mask length; t = 0 succeeds iff z_size = 0.
inline std::optional<std::vector<Vertex>> exists_cover_tuple(std::span<const std::span<const UncoveredRow>> groups,
                                                             std::size_t z_size,
                                                             std::uint64_t budget = kDefaultTupleBudget) {
  const std::size_t t = groups.size();
  if (t == 0) {
    if (z_size == 0) return std::vector<Vertex>{};
    return std::nullopt;
  }
  for (auto grp : groups) {
    if (grp.empty()) return std::nullopt;
    for (const auto& row : grp) {
      require(row.mask.size() == z_size, ErrorCode::InvalidArgument, "mask length differs from |Z|");
    }
  }
  const std::size_t h = (t + 1) / 2;
  const std::uint64_t left = detail::product_saturating(groups, 0, h);
  const std::uint64_t right = detail::product_saturating(groups, h, t);
  require(left <= budget && right <= budget, ErrorCode::BudgetExceeded,
          "tuple enumeration of " + std::to_string(std::max(left, right)) + " half-tuples exceeds budget " +
              std::to_string(budget));

  // Right half: AND of masks for every tuple over positions [h, t), in lexicographic order.
  struct Half {
    std::vector<std::uint32_t> idx;
    Bitset mask;
  };
  std::vector<Half> rights;
  {
    std::vector<std::uint32_t> idx(t - h, 0);
    rights.reserve(static_cast<std::size_t>(right));
    while (true) {
      Bitset m(z_size, true);
      for (std::size_t p = h; p < t; ++p) m &= groups[p][idx[p - h]].mask;
      rights.push_back({idx, std::move(m)});
      std::ptrdiff_t p = static_cast<std::ptrdiff_t>(t - h) - 1;
      while (p >= 0 && ++idx[p] == groups[h + p].size()) {
        idx[p] = 0;
        --p;
      }
      if (p < 0) break;
    }
  }

  std::vector<Bitset> run(h + 1);
  run[0] = Bitset(z_size, true);
  std::vector<std::uint32_t> idx(h, 0);
  std::optional<std::vector<Vertex>> found;

  auto emit = [&](const Half& r) {
    std::vector<Vertex> tuple;
    tuple.reserve(t);
    for (std::size_t p = 0; p < h; ++p) tuple.push_back(groups[p][idx[p]].candidate);
    for (std::size_t p = h; p < t; ++p) tuple.push_back(groups[p][r.idx[p - h]].candidate);
    found = std::move(tuple);
  };

  auto stream = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == h) {
      const Bitset& lm = run[h];
      for (const Half& r : rights) {
        if (!lm.intersects(r.mask)) {
          emit(r);
          return true;
        }
      }
      return false;
    }
    for (std::uint32_t i = 0; i < groups[depth].size(); ++i) {
      idx[depth] = i;
      run[depth + 1] = run[depth] & groups[depth][i].mask;
      if (self(self, depth + 1)) return true;
    }
    return false;
  };
  stream(stream, 0);
  return found;
}

/// Same candidate group at every one of `arity` positions.
inline std::optional<std::vector<Vertex>> exists_cover_tuple(std::span<const UncoveredRow> rows, std::size_t arity,
                                                             std::size_t z_size,
                                                             std::uint64_t budget = kDefaultTupleBudget) {
  std::vector<std::span<const UncoveredRow>> groups(arity, rows);
  return exists_cover_tuple(std::span<const std::span<const UncoveredRow>>(groups), z_size, budget);
}

/// {v : d(t, v) <= r for all t in T}; empty T gives all of V.
template <typename RowOf>
VertexSet intersect_balls(RowOf&& row_of, std::size_t n, std::span<const Vertex> T, Radius r) {
  VertexSet out = VertexSet::full(n);
  for (Vertex t : T) {
    const auto& row = row_of(t);
    for (Vertex v : out.members()) {
      if (!within(row[v], r)) out.erase(v);
    }
    if (out.empty()) break;
  }
  return out;
}

inline VertexSet intersect_balls(DistanceTable& table, std::span<const Vertex> T, Radius r) {
  return intersect_balls([&](Vertex t) -> const std::vector<Dist>& { return table.row(t); }, table.n(), T, r);
}

}  // namespace kcenter
