#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "kcenter/approx/common.hpp"
#include "kcenter/approx/config.hpp"
#include "kcenter/approx/schedule.hpp"

namespace kcenter {

namespace detail {

/// Shared recursion of the two step-wise deciders. With `stop_level` = k - 1 and
/// `complete_from_v` false it is the W-scan / ball-intersection variant; with
/// `complete_from_v` true it stops at `stop_level` = l and completes from V^{k-l}.
class StepSearch {
 public:
  StepSearch(const Graph& g, std::size_t k, Radius R, Radius alpha, const DeltaSchedule& schedule,
             std::size_t stop_level, bool complete_from_v, bool shared_sample, const ApproxConfig& cfg)
      : g_(g), table_(g), k_(k), R_(R), alpha_(alpha), target_(2 * R - alpha), schedule_(schedule),
        stop_(stop_level), complete_from_v_(complete_from_v), shared_(shared_sample), cfg_(cfg),
        all_(all_vertices(g.n())) {
    table_.fill_all();
    if (shared_) {
      const double d = *std::min_element(schedule.deltas.begin(), schedule.deltas.end());
      auto rng = derive_rng(cfg.seed, R, 0);
      shared_sample_ = sample_hitting_set(g.n(), d, cfg.sample_const, rng).members();
    }
  }

  std::optional<Covered> run() { return step({}); }

 private:
  const std::vector<Vertex>& sample(std::size_t level) {
    if (shared_) return shared_sample_;
    if (level_samples_.size() <= level) level_samples_.resize(level + 1);
    auto& slot = level_samples_[level];
    if (!slot) {
      auto rng = derive_rng(cfg_.seed, R_, level + 1);
      slot = sample_hitting_set(g_.n(), schedule_.deltas[level], cfg_.sample_const, rng).members();
    }
    return *slot;
  }

  const std::vector<Dist>& dist_to_sample(std::size_t level) {
    const std::size_t key = shared_ ? 0 : level;
    if (sample_dist_.size() <= key) sample_dist_.resize(key + 1);
    auto& slot = sample_dist_[key];
    if (!slot) slot = multi_source_dist(g_, VertexSet::of(g_.n(), sample(level)));
    return *slot;
  }

  std::optional<Covered> step(const std::vector<Vertex>& C) {
    const std::size_t i = C.size();
    const auto d_c = dist_to(g_, C);
    const auto Y = outside_ball(d_c, target_);

    if (complete_from_v_ && i == stop_) {
      const std::vector<std::vector<Vertex>> groups(k_ - i, all_);
      if (auto tup = cover_tuple(table_, groups, Y, target_, cfg_.budget)) {
        return try_cover(g_, with(C, *tup), k_, target_, CoverSource::VTuple);
      }
      return std::nullopt;
    }

    // B(C, R + (2i-1) alpha)^c; at i = 0 the ball is empty and U = V.
    const std::vector<Vertex> U = i == 0 ? all_ : outside_ball(d_c, R_ + static_cast<Radius>(2 * i - 1) * alpha_);
    if (U.empty()) return try_cover(g_, C, k_, target_, CoverSource::Padded);
    const auto& S = sample(i);
    const auto W = neighborhood_of_farthest(g_, dist_to_sample(i), U, neighborhood_size(g_.n(), schedule_.deltas[i]));

    if (!complete_from_v_ && i == stop_) {
      for (Vertex s : W) {
        const auto& row = table_.row(s);
        if (std::all_of(Y.begin(), Y.end(), [&](Vertex y) { return within(row[y], target_); })) {
          if (auto c = try_cover(g_, with(C, std::vector<Vertex>{s}), k_, target_, CoverSource::WScan)) return c;
        }
      }
      const VertexSet sample_set = VertexSet::of(g_.n(), S);
      const VertexSet Q = intersect_balls(table_, intersect_lists(sample_set, U), R_);
      if (!Q.empty()) {
        return try_cover(g_, with(C, std::vector<Vertex>{Q.first()}), k_, target_, CoverSource::QIntersection);
      }
      return std::nullopt;
    }

    {
      const std::vector<std::vector<Vertex>> groups(k_ - i, S);
      if (auto tup = cover_tuple(table_, groups, Y, target_, cfg_.budget)) {
        if (auto c = try_cover(g_, with(C, *tup), k_, target_, CoverSource::SampleTuple)) return c;
      }
    }
    for (Vertex s : W) {
      auto next = with(C, std::vector<Vertex>{s});
      if (auto c = step(next)) return c;
    }
    return std::nullopt;
  }

  const Graph& g_;
  DistanceTable table_;
  std::size_t k_;
  Radius R_;
  Radius alpha_;
  Radius target_;
  const DeltaSchedule& schedule_;
  std::size_t stop_;
  bool complete_from_v_;
  bool shared_;
  const ApproxConfig& cfg_;
  std::vector<Vertex> all_;
  std::vector<Vertex> shared_sample_;
  std::vector<std::optional<std::vector<Vertex>>> level_samples_;
  std::vector<std::optional<std::vector<Dist>>> sample_dist_;
};

}  // namespace detail

/// Covered with radius <= 2R - floor(R/(2k-1)) whenever R_k(g) <= R (w.h.p.), else AboveR.
/// The default schedule puts every level at 1/2 with one shared sample; a different schedule
/// switches to a fresh sample per level unless cfg.sampling says otherwise.
inline DecisionOutcome decide_kcenter_2k(const Graph& g, std::size_t k, Radius R, const ApproxConfig& cfg,
                                         const std::optional<DeltaSchedule>& schedule = std::nullopt) {
  detail::require_unweighted(g, "decide_kcenter_2k");
  require(k >= 1, ErrorCode::InvalidArgument, "k must be >= 1");
  require(R >= 0, ErrorCode::InvalidArgument, "R must be >= 0");
  cfg.validate();
  const std::size_t n = g.n();
  if (k >= n) return Covered{VertexSet::full(n), 0, CoverSource::Trivial};
  const DeltaSchedule plan = schedule.value_or(plan_deltas_combinatorial(k));
  require(plan.levels() == k, ErrorCode::InvalidArgument, "schedule must have k levels");
  const bool shared = cfg.sampling == SamplingMode::Default ? plan.mode == ScheduleMode::Combinatorial
                                                            : cfg.sampling == SamplingMode::Shared;
  const Radius alpha = R / static_cast<Radius>(2 * k - 1);
  detail::StepSearch search(g, k, R, alpha, plan, k - 1, false, shared, cfg);
  if (auto c = search.run()) return *c;
  return AboveR{};
}

/// Covered with radius <= 2R - floor(R/(2l)) whenever R_k(g) <= R (w.h.p.), else AboveR.
/// Recursion stops after l levels and completes the center set from V^{k-l}.
inline DecisionOutcome decide_kcenter_2l(const Graph& g, std::size_t k, std::size_t l, Radius R,
                                         const ApproxConfig& cfg, const DeltaSchedule& schedule) {
  detail::require_unweighted(g, "decide_kcenter_2l");
  require(l >= 1 && l <= k, ErrorCode::InvalidArgument, "need 1 <= l <= k");
  require(R >= 0, ErrorCode::InvalidArgument, "R must be >= 0");
  require(schedule.levels() == l, ErrorCode::InvalidArgument, "schedule must have l levels");
  cfg.validate();
  const std::size_t n = g.n();
  if (k >= n) return Covered{VertexSet::full(n), 0, CoverSource::Trivial};
  const bool shared = cfg.sampling == SamplingMode::Shared;
  const Radius alpha = R / static_cast<Radius>(2 * l);
  detail::StepSearch search(g, k, R, alpha, schedule, l, true, shared, cfg);
  if (auto c = search.run()) return *c;
  return AboveR{};
}

inline DecisionOutcome decide_kcenter_2l(const Graph& g, std::size_t k, std::size_t l, Radius R,
                                         const ApproxConfig& cfg) {
  return decide_kcenter_2l(g, k, l, R, cfg, plan_deltas_tradeoff(k, l));
}

}  // namespace kcenter
