#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "kcenter/approx/common.hpp"
#include "kcenter/approx/config.hpp"

namespace kcenter {

struct Weighted3Exponents {
  double mu = 0;       // log_n m - 1 as measured
  double mu_used = 0;  // after clamping into [mu0, mu1]
  double beta = 1.0 / 3;
  double gamma = 1.0 / 3;
  double delta = 1.0 / 3;
  bool fallback = false;
};

/// Sampling exponents for S1 (delta), S2 (gamma), S3 (beta). mu is clamped into
/// [mu0, mu1]; if the result still leaves the feasible region all three become 1/3.
inline Weighted3Exponents weighted3_exponents(std::size_t n, std::size_t m, double omega) {
  Weighted3Exponents e;
  const double w = omega;
  if (n >= 2 && m >= 1) e.mu = std::log(static_cast<double>(m)) / std::log(static_cast<double>(n)) - 1.0;
  const double mu0 = w - 2 + 1 / (w + 1);
  const double mu1 = (3 * w * w - 3 * w - 1) / (4 * w + 1);
  e.mu_used = std::clamp(e.mu, mu0, mu1);
  const double beta = (2 * (w - 1) - 3 * e.mu_used) / (3 - w + 1 / w);
  const double gamma = 1.0 / 3 - beta * (w + 1) / (3 * w);
  const double delta = 1.0 / 3 - beta * (w - 2) / (3 * w);
  constexpr double eps = 1e-9;
  const bool feasible = beta >= -eps && gamma >= -eps && delta >= -eps && gamma <= beta + eps &&
                        gamma <= delta + eps && beta + gamma + delta <= 1 + eps;
  if (!feasible) {
    e.fallback = true;
    return e;
  }
  e.beta = std::clamp(beta, 0.0, 1.0);
  e.gamma = std::clamp(gamma, 0.0, 1.0);
  e.delta = std::clamp(delta, 0.0, 1.0);
  return e;
}

/// Covered with radius <= floor(7R/4) + M whenever R_3(g) <= R (w.h.p.), else AboveR.
inline DecisionOutcome decide_3center_74_weighted(const Graph& g, Radius R, const ApproxConfig& cfg) {
  require(R >= 0, ErrorCode::InvalidArgument, "R must be >= 0");
  cfg.validate();
  constexpr std::size_t k = 3;
  const std::size_t n = g.n();
  if (n <= k) return Covered{VertexSet::full(n), 0, CoverSource::Trivial};

  const Radius M = g.max_weight();
  const Radius x_cover = (7 * R) / 4;          // R + x with x = 3R/4
  const Radius target = x_cover + M;           // final bound
  const Radius case1_far = (5 * R) / 4 + M;    // 2R - x + M
  const Radius joint = (3 * R) / 2;            // 3R - 2x
  const auto ex = weighted3_exponents(n, g.m(), cfg.omega);

  DistanceTable table(g);
  const auto V = detail::all_vertices(n);
  auto draw = [&](double e, std::uint64_t stream) {
    auto rng = derive_rng(cfg.seed, R, stream);
    return sample_hitting_set(n, e, cfg.sample_const, rng);
  };
  const VertexSet S1 = draw(ex.delta, 0);
  const VertexSet S2 = draw(ex.gamma, 1);
  const VertexSet S3 = draw(ex.beta, 2);
  const auto d1 = multi_source_dist(g, S1);
  const auto d2 = multi_source_dist(g, S2);
  const auto d3 = multi_source_dist(g, S3);

  {
    const auto s1_list = S1.members();
    const std::vector<Vertex> groups[] = {s1_list, s1_list, s1_list};
    if (auto tup = detail::cover_tuple(table, groups, V, x_cover, cfg.budget)) {
      if (auto c = detail::try_cover(g, *tup, k, target, CoverSource::SampleTuple)) return *c;
    }
  }

  const auto W1 = detail::neighborhood_of_farthest(g, d1, V, neighborhood_size(n, ex.delta));
  const std::size_t w2_size = neighborhood_size(n, ex.gamma);
  const std::size_t w3_size = neighborhood_size(n, ex.beta);
  const auto s2_list = S2.members();

  for (Vertex s1 : W1) {
    const auto& row1 = table.row(s1);
    const auto U1 = detail::outside_ball(row1, target);
    const Vertex one[] = {s1};
    if (U1.empty()) {
      if (auto c = detail::try_cover(g, one, k, target, CoverSource::Padded)) return *c;
      continue;
    }

    // Case I: sampled vertices far from s1 must be covered at R by the other two centers.
    {
      std::vector<Vertex> Z;
      for (Vertex t : s2_list) {
        if (!within(row1[t], case1_far)) Z.push_back(t);
      }
      const std::vector<Vertex> groups[] = {V, V};
      if (auto tup = detail::cover_tuple(table, groups, Z, R, cfg.budget)) {
        if (auto c = detail::try_cover(g, detail::with(one, *tup), k, target, CoverSource::ProductCase)) return *c;
      }
    }

    // Case II: some s2 near w2(s1) is close to a second optimal center.
    for (Vertex s2 : detail::neighborhood_of_farthest(g, d2, U1, w2_size)) {
      const auto& row2 = table.row(s2);
      const Vertex two[] = {s1, s2};
      std::vector<Vertex> U2;
      for (Vertex u = 0; u < n; ++u) {
        if (!within(row1[u], joint) && !within(row2[u], joint)) U2.push_back(u);
      }
      if (U2.empty()) {
        if (auto c = detail::try_cover(g, two, k, target, CoverSource::Padded)) return *c;
        continue;
      }
      for (Vertex s3 : detail::neighborhood_of_farthest(g, d3, U2, w3_size)) {
        const Vertex three[] = {s1, s2, s3};
        if (auto c = detail::try_cover(g, three, k, target, CoverSource::WScan)) return *c;
      }
      const VertexSet Q = intersect_balls(table, detail::intersect_lists(S3, U2), R);
      if (!Q.empty()) {
        const Vertex three[] = {s1, s2, Q.first()};
        if (auto c = detail::try_cover(g, three, k, target, CoverSource::QIntersection)) return *c;
      }
    }
  }
  return AboveR{};
}

}  // namespace kcenter
