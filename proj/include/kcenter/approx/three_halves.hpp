#pragma once

#include <cstddef>
#include <vector>

#include "kcenter/approx/common.hpp"
#include "kcenter/approx/config.hpp"

namespace kcenter {

/// Covered with radius <= R + ceil(R/2) whenever R_k(g) <= R (w.h.p.), else AboveR.
inline DecisionOutcome decide_kcenter_32(const Graph& g, std::size_t k, Radius R, const ApproxConfig& cfg) {
  detail::require_unweighted(g, "decide_kcenter_32");
  require(k >= 1, ErrorCode::InvalidArgument, "k must be >= 1");
  require(R >= 0, ErrorCode::InvalidArgument, "R must be >= 0");
  cfg.validate();
  const std::size_t n = g.n();
  if (k >= n) return Covered{VertexSet::full(n), 0, CoverSource::Trivial};

  const Radius target = R + (R + 1) / 2;
  const double delta = 1.0 / static_cast<double>(k + 1);
  DistanceTable table(g);
  table.fill_all();
  const auto V = detail::all_vertices(n);

  auto rng = derive_rng(cfg.seed, R, 0);
  const VertexSet S = sample_hitting_set(n, delta, cfg.sample_const, rng);
  const auto s_list = S.members();
  const auto d_s = multi_source_dist(g, S);
  const auto W = detail::neighborhood_of_farthest(g, d_s, V, neighborhood_size(n, delta));

  {
    const std::vector<std::vector<Vertex>> groups(k, s_list);
    if (auto tup = detail::cover_tuple(table, groups, V, target, cfg.budget)) {
      if (auto c = detail::try_cover(g, *tup, k, target, CoverSource::SampleTuple)) return *c;
    }
  }

  // Some s1 in W lies within floor(R/2) of an optimal center; complete it from V.
  const std::vector<std::vector<Vertex>> rest(k - 1, V);
  for (Vertex s1 : W) {
    const auto Z = detail::outside_ball(table.row(s1), target);
    if (auto tup = detail::cover_tuple(table, rest, Z, target, cfg.budget)) {
      const Vertex one[] = {s1};
      if (auto c = detail::try_cover(g, detail::with(one, *tup), k, target, CoverSource::VTuple)) return *c;
    }
  }
  return AboveR{};
}

}  // namespace kcenter
