#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "kcenter/approx/common.hpp"
#include "kcenter/approx/config.hpp"

namespace kcenter {

/// Sampling exponents of the 2-center decider: {delta, gamma}.
inline std::pair<double, double> two_center_exponents(double omega) {
  const double w = omega;
  return {(2 * w - 3) / (3 * w - 3), (w * w - 3 * w + 3) / (3 * w - 3)};
}

/// Covered with radius <= 2R - floor(R/3) whenever R_2(g) <= R (w.h.p.), else AboveR.
inline DecisionOutcome decide_2center_53(const Graph& g, Radius R, const ApproxConfig& cfg) {
  detail::require_unweighted(g, "decide_2center_53");
  require(R >= 0, ErrorCode::InvalidArgument, "R must be >= 0");
  cfg.validate();
  constexpr std::size_t k = 2;
  const std::size_t n = g.n();
  if (n <= k) return Covered{VertexSet::full(n), 0, CoverSource::Trivial};

  const Radius a = R / 3;
  const Radius target = 2 * R - a;
  const auto [delta, gamma] = two_center_exponents(cfg.omega);
  DistanceTable table(g);
  const auto V = detail::all_vertices(n);

  auto rng_s = derive_rng(cfg.seed, R, 0);
  const VertexSet S = sample_hitting_set(n, delta, cfg.sample_const, rng_s);
  const auto s_list = S.members();
  const auto d_s = multi_source_dist(g, S);
  const auto W = detail::neighborhood_of_farthest(g, d_s, V, neighborhood_size(n, delta));

  // Two sampled centers within R - floor(R/3) of the optimum cover at 2R - floor(R/3).
  {
    const std::vector<Vertex> groups[] = {s_list, s_list};
    if (auto tup = detail::cover_tuple(table, groups, V, target, cfg.budget)) {
      if (auto c = detail::try_cover(g, *tup, k, target, CoverSource::SampleTuple)) return *c;
    }
  }

  auto rng_t = derive_rng(cfg.seed, R, 1);
  const VertexSet T = sample_hitting_set(n, gamma, cfg.sample_const, rng_t);
  const auto d_t = multi_source_dist(g, T);
  const std::size_t w_size = neighborhood_size(n, gamma);

  for (Vertex s1 : W) {
    const auto& row = table.row(s1);
    const auto U = detail::outside_ball(row, R + a);
    const Vertex one[] = {s1};
    if (U.empty()) {
      if (auto c = detail::try_cover(g, one, k, target, CoverSource::Padded)) return *c;
      continue;
    }
    const auto Y = detail::outside_ball(row, target);
    for (Vertex s2 : detail::neighborhood_of_farthest(g, d_t, U, w_size)) {
      const auto& r2 = table.row(s2);
      const bool ok = std::all_of(Y.begin(), Y.end(), [&](Vertex y) { return within(r2[y], target); });
      if (!ok) continue;
      const Vertex pair[] = {s1, s2};
      if (auto c = detail::try_cover(g, pair, k, target, CoverSource::WScan)) return *c;
    }
    const auto TU = detail::intersect_lists(T, U);
    const VertexSet Q = intersect_balls(table, TU, R);
    if (!Q.empty()) {
      const Vertex pair[] = {s1, Q.first()};
      if (auto c = detail::try_cover(g, pair, k, target, CoverSource::QIntersection)) return *c;
    }
  }
  return AboveR{};
}

}  // namespace kcenter
