#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "kcenter/approx/gonzalez.hpp"
#include "kcenter/approx/schedule.hpp"
#include "kcenter/approx/search.hpp"
#include "kcenter/approx/step_search.hpp"
#include "kcenter/approx/three_halves.hpp"
#include "kcenter/approx/two_center.hpp"
#include "kcenter/approx/weighted3.hpp"
#include "kcenter/cli/record.hpp"
#include "kcenter/exact/oracle.hpp"

namespace kcenter::cli {

inline const std::vector<std::string>& algorithm_ids() {
  static const std::vector<std::string> ids = {"exact", "gonzalez", "c2-53", "k-32", "k-2k", "k-2l", "w3-74"};
  return ids;
}

struct SolveOptions {
  std::string algo = "k-2k";
  std::size_t k = 2;
  std::optional<std::size_t> l;
  std::uint64_t seed = 1;
  unsigned trials = 1;
  double omega = 2.372;
  double sample_const = 3.0;
  std::optional<std::uint64_t> budget;
  std::string schedule = "default";  // default | combinatorial | omega2 | omega-general
  std::string sampling = "default";  // default | shared | per-level
  bool with_exact = false;
  bool timing = true;
};

/// --budget wins, then KCENTER_BUDGET, then the component default.
inline std::uint64_t resolve_budget(const std::optional<std::uint64_t>& flag, std::uint64_t fallback) {
  if (flag) return *flag;
  if (const char* env = std::getenv("KCENTER_BUDGET"); env && *env) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    require(end && *end == '\0', ErrorCode::ParseError, std::string("KCENTER_BUDGET is not an integer: ") + env);
    return v;
  }
  return fallback;
}

inline SamplingMode parse_sampling(const std::string& s) {
  if (s == "default") return SamplingMode::Default;
  if (s == "shared") return SamplingMode::Shared;
  if (s == "per-level") return SamplingMode::PerLevel;
  fail(ErrorCode::InvalidArgument, "unknown sampling mode '" + s + "'");
}

inline std::optional<DeltaSchedule> schedule_for_2k(const SolveOptions& o) {
  if (o.schedule == "default") return std::nullopt;
  if (o.schedule == "combinatorial") return plan_deltas_combinatorial(o.k);
  if (o.schedule == "omega2") return plan_deltas_omega2(o.k);
  if (o.schedule == "omega-general") return plan_deltas_omega_general(o.k, o.omega);
  fail(ErrorCode::InvalidArgument, "unknown schedule '" + o.schedule + "'");
}

inline Decider make_decider(const SolveOptions& o) {
  const std::size_t k = o.k;
  if (o.algo == "c2-53") {
    require(k == 2, ErrorCode::InvalidArgument, "c2-53 solves 2-center only; pass --k 2");
    return [](const Graph& g, Radius R, const ApproxConfig& c) { return decide_2center_53(g, R, c); };
  }
  if (o.algo == "k-32") {
    return [k](const Graph& g, Radius R, const ApproxConfig& c) { return decide_kcenter_32(g, k, R, c); };
  }
  if (o.algo == "k-2k") {
    auto plan = schedule_for_2k(o);
    return [k, plan](const Graph& g, Radius R, const ApproxConfig& c) { return decide_kcenter_2k(g, k, R, c, plan); };
  }
  if (o.algo == "k-2l") {
    require(o.l.has_value(), ErrorCode::InvalidArgument, "k-2l needs --ell");
    const std::size_t l = *o.l;
    require(l >= 1 && l <= k, ErrorCode::InvalidArgument, "need 1 <= ell <= k");
    const DeltaSchedule plan = plan_deltas_tradeoff(k, l);
    return [k, l, plan](const Graph& g, Radius R, const ApproxConfig& c) {
      return decide_kcenter_2l(g, k, l, R, c, plan);
    };
  }
  if (o.algo == "w3-74") {
    require(k == 3, ErrorCode::InvalidArgument, "w3-74 solves 3-center only; pass --k 3");
    return [](const Graph& g, Radius R, const ApproxConfig& c) { return decide_3center_74_weighted(g, R, c); };
  }
  fail(ErrorCode::InvalidArgument, "unknown algorithm '" + o.algo + "'");
}

inline void require_feasible(const Graph& g, std::size_t k) {
  const std::size_t comps = component_count(g);
  require(k >= comps, ErrorCode::Infeasible,
          "k = " + std::to_string(k) + " is below the component count " + std::to_string(comps));
}

/// Runs one algorithm on g. Errors propagate as kcenter::Error.
inline RunRecord solve(const Graph& g, const SolveOptions& o) {
  require(o.k >= 1, ErrorCode::InvalidArgument, "k must be >= 1");
  require(g.n() >= 1, ErrorCode::InvalidInstance, "empty graph");
  const auto start = std::chrono::steady_clock::now();
  RunRecord rec;
  rec.algo = o.algo;
  rec.k = o.k;
  rec.l = o.algo == "k-2l" ? o.l : std::nullopt;
  rec.seed = o.seed;
  rec.trials = o.trials;
  rec.n = g.n();
  rec.m = g.m();
  rec.max_weight = g.max_weight();
  const std::uint64_t exact_budget = resolve_budget(o.budget, kDefaultExactBudget);

  if (o.algo == "exact") {
    require_feasible(g, o.k);
    CenterSolution s = exact_k_radius(g, o.k, exact_budget);
    rec.radius = s.radius;
    rec.centers = s.centers.members();
    rec.exact = s.radius;
    rec.via = "exhaustive";
  } else if (o.algo == "gonzalez") {
    require_feasible(g, o.k);
    CenterSolution s = gonzalez_2approx(g, o.k);
    rec.radius = s.radius;
    rec.centers = s.centers.members();
    rec.via = "farthest-first";
  } else {
    ApproxConfig cfg;
    cfg.seed = o.seed;
    cfg.trials = o.trials;
    cfg.omega = o.omega;
    cfg.sample_const = o.sample_const;
    cfg.budget = resolve_budget(o.budget, kDefaultTupleBudget);
    cfg.sampling = parse_sampling(o.sampling);
    SearchResult s = approximate_radius(g, o.k, make_decider(o), cfg);
    rec.upper_bound = s.upper_bound;
    rec.probes = s.probes;
    rec.radius = s.solution.radius;
    rec.centers = s.solution.centers.members();
    rec.via = std::string(to_string(s.via));
  }

  if (o.with_exact && !rec.exact) {
    try {
      rec.exact = exact_k_radius(g, o.k, exact_budget).radius;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BudgetExceeded) throw;
    }
  }
  if (rec.exact) rec.bound_satisfied = bound_holds(rec.radius, *rec.exact, declared_bound(o.algo, o.k, o.l, g.max_weight()));
  if (o.timing) {
    rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  return rec;
}

}  // namespace kcenter::cli
