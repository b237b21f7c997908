#pragma once

#include <cstddef>
#include <functional>
#include <optional>

#include "kcenter/approx/config.hpp"
#include "kcenter/exact/oracle.hpp"
#include "kcenter/graph/distance.hpp"

namespace kcenter {

/// A decider with k (and l, schedule, ...) already bound.
using Decider = std::function<DecisionOutcome(const Graph&, Radius, const ApproxConfig&)>;

struct SearchResult {
  CenterSolution solution;
  Radius upper_bound = 0;        // U, the top of the searched range
  Radius smallest_success = 0;   // smallest probed R that returned Covered
  std::size_t probes = 0;
  CoverSource via = CoverSource::Trivial;
};

/// Runs the decider up to cfg.trials times with derived seeds; first Covered wins.
inline DecisionOutcome decide_with_trials(const Decider& decider, const Graph& g, Radius R, const ApproxConfig& cfg) {
  ApproxConfig local = cfg;
  for (unsigned t = 0; t < cfg.trials; ++t) {
    local.seed = trial_seed(cfg.seed, t);
    DecisionOutcome o = decider(g, R, local);
    if (is_covered(o)) return o;
  }
  return AboveR{};
}

/// Top of the binary-search range: ecc(0) for connected unweighted graphs, n*M for
/// weighted ones, n - 1 for disconnected unweighted ones.
inline Radius search_upper_bound(const Graph& g) {
  const Radius n = static_cast<Radius>(g.n());
  if (g.weighted()) return n * static_cast<Radius>(g.max_weight());
  const Dist e = eccentricity(g, 0);
  return e == kUnreachable ? std::max<Radius>(n - 1, 0) : static_cast<Radius>(e);
}

/// Binary search over R in [0, U]; keeps the smallest-radius certificate seen.
inline SearchResult approximate_radius(const Graph& g, std::size_t k, const Decider& decider, const ApproxConfig& cfg) {
  require(k >= 1, ErrorCode::InvalidArgument, "k must be >= 1");
  require(g.n() >= 1, ErrorCode::InvalidInstance, "empty graph");
  cfg.validate();
  const std::size_t comps = component_count(g);
  require(k >= comps, ErrorCode::Infeasible,
          "k = " + std::to_string(k) + " is below the component count " + std::to_string(comps));
  SearchResult out;
  if (k >= g.n()) {
    out.solution = {VertexSet::full(g.n()), 0};
    return out;
  }
  out.upper_bound = search_upper_bound(g);

  std::optional<Covered> best;
  std::optional<Radius> best_r;
  auto probe = [&](Radius R) {
    ++out.probes;
    DecisionOutcome o = decide_with_trials(decider, g, R, cfg);
    if (auto* c = std::get_if<Covered>(&o)) {
      if (!best || c->radius < best->radius) best = *c;
      if (!best_r || R < *best_r) best_r = R;
      return true;
    }
    return false;
  };

  Radius lo = 0;
  Radius hi = out.upper_bound;
  bool hi_ok = false;
  while (lo < hi) {
    const Radius mid = lo + (hi - lo) / 2;
    if (probe(mid)) {
      hi = mid;
      hi_ok = true;
    } else {
      lo = mid + 1;
    }
  }
  if (!hi_ok) probe(hi);
  require(best.has_value(), ErrorCode::NoCertificate,
          "no cover found even at the upper bound R = " + std::to_string(out.upper_bound));
  out.solution = {best->centers, best->radius};
  out.smallest_success = *best_r;
  out.via = best->via;
  return out;
}

}  // namespace kcenter
