#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "kcenter/cli/files.hpp"
#include "kcenter/cli/solve.hpp"
#include "kcenter/gadget/gadget.hpp"
#include "kcenter/gadget/random_graphs.hpp"
#include "kcenter/gadget/setcover.hpp"

namespace kcenter::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,  // verification failed or other runtime error
  kExitUsage = 2,    // parse or usage error
  kExitInfeasible = 3,
  kExitBudget = 4,
};

inline int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::InvalidArgument: return kExitUsage;
    case ErrorCode::Infeasible: return kExitInfeasible;
    case ErrorCode::BudgetExceeded: return kExitBudget;
    default: return kExitFailure;
  }
}

// gen random

struct RandomGraphOptions {
  std::string kind = "cycle";  // cycle | path | grid | star | complete | er
  std::size_t n = 0;
  std::size_t w = 0;
  std::size_t h = 0;
  double p = 0.1;
  std::uint64_t seed = 1;
  Dist max_weight = 1;
};

inline Graph make_random_graph(const RandomGraphOptions& o) {
  Graph g;
  if (o.kind == "cycle") g = make_cycle(o.n);
  else if (o.kind == "path") g = make_path(o.n);
  else if (o.kind == "grid") g = make_grid(o.w, o.h);
  else if (o.kind == "star") g = make_star(o.n);
  else if (o.kind == "complete") g = make_complete(o.n);
  else if (o.kind == "er") return make_erdos_renyi(o.n, o.p, o.seed, o.max_weight);
  else fail(ErrorCode::InvalidArgument, "unknown graph kind '" + o.kind + "'");
  return o.max_weight > 1 ? with_random_weights(g, o.max_weight, o.seed) : g;
}

// gen gadget / simple-gadget

struct GadgetGenOptions {
  bool simple = false;
  std::size_t t = 1;
  std::size_t ell = 1;
  std::optional<std::size_t> k;  // declared cover size; smallest cover when absent
  std::string setcover_path;
  std::string ov_path;
  std::size_t power = 1;
  std::optional<std::uint64_t> budget;
};

inline SetCoverInstance load_source(const GadgetGenOptions& o) {
  require(o.setcover_path.empty() != o.ov_path.empty(), ErrorCode::InvalidArgument,
          "pass exactly one of --setcover or --ov");
  SetCoverInstance sc =
      o.setcover_path.empty() ? ov_to_setcover(read_ov_file(o.ov_path)) : read_setcover_file(o.setcover_path);
  if (o.power > 1) sc = power_setcover(sc, o.power, resolve_budget(o.budget, kDefaultPowerBudget));
  return sc;
}

/// Smallest cover size, refusing when the brute force would exceed `budget` subsets.
inline std::size_t min_cover_within_budget(const SetCoverInstance& sc, std::uint64_t budget) {
  std::uint64_t spent = 0;
  for (std::size_t s = 1; s <= sc.a_count; ++s) {
    spent += binomial_saturating(sc.a_count, s);
    require(spent <= budget, ErrorCode::BudgetExceeded, "minimum cover search exceeds budget; pass --k");
    if (find_set_cover(sc, s)) return s;
  }
  return 0;
}

inline GadgetOutput generate_gadget(const GadgetGenOptions& o) {
  const SetCoverInstance sc = load_source(o);
  const std::size_t k = o.k ? *o.k : min_cover_within_budget(sc, resolve_budget(o.budget, kDefaultExactBudget));
  const std::uint64_t vbudget = resolve_budget(o.budget, kDefaultGadgetVertexBudget);
  return o.simple ? gen_simple_lb(sc, k, o.ell, vbudget) : gen_recursive_lb(sc, o.t, o.ell, k, vbudget);
}

// verify

struct VerifyOptions {
  std::string graph_path;
  std::string centers_path;
  std::string centers_inline;
  std::string record_path;
  std::optional<Radius> radius;
  std::string gadget_prefix;
  std::string cover_path;
};

inline std::vector<Vertex> to_vertices(const std::vector<std::uint64_t>& ids, std::size_t n) {
  std::vector<Vertex> out;
  for (auto id : ids) {
    require(id < n, ErrorCode::InvalidInstance, "center " + std::to_string(id) + " is not a vertex");
    out.push_back(static_cast<Vertex>(id));
  }
  return out;
}

inline int verify_graph_cover(const VerifyOptions& o, std::ostream& out) {
  const Graph g = read_graph_file(o.graph_path);
  std::vector<std::uint64_t> ids;
  std::optional<Radius> radius = o.radius;
  if (!o.record_path.empty()) {
    auto in = open_input(o.record_path);
    std::string line;
    std::size_t lineno = 0;
    require(kcenter::detail::next_data_line(in, line, lineno), ErrorCode::ParseError, "empty record file");
    const auto kv = parse_kv_line(line);
    require(kv.count("centers") && kv.count("radius"), ErrorCode::ParseError, "record lacks centers or radius");
    ids = parse_id_list(kv.at("centers"));
    if (!radius) radius = static_cast<Radius>(parse_u64(kv.at("radius"), "radius"));
  } else if (!o.centers_path.empty()) {
    auto in = open_input(o.centers_path);
    ids = read_id_list(in);
  } else {
    ids = parse_id_list(o.centers_inline);
  }
  require(radius.has_value(), ErrorCode::InvalidArgument, "verify needs --radius");
  require(!ids.empty(), ErrorCode::InvalidArgument, "no centers given");
  const VertexSet centers = VertexSet::of(g.n(), to_vertices(ids, g.n()));
  const Dist r = cover_radius(g, centers);
  const bool ok = within(r, *radius);
  out << "verify=" << (ok ? "pass" : "fail") << " centers=" << centers.size()
      << " cover_radius=" << kcenter::cli::detail::dist_text(r) << " radius=" << *radius << '\n';
  return ok ? kExitOk : kExitFailure;
}

inline int verify_gadget(const VerifyOptions& o, std::ostream& out) {
  const GadgetOutput g = load_gadget(o.gadget_prefix);
  require(!o.cover_path.empty(), ErrorCode::InvalidArgument, "gadget verification needs --cover");
  auto in = open_input(o.cover_path);
  std::vector<std::uint32_t> cover;
  for (auto id : read_id_list(in)) cover.push_back(static_cast<std::uint32_t>(id));
  const VertexSet centers = yes_case_centers(g, cover);
  const Dist r = cover_radius(g.graph, centers);
  const bool radius_ok = within(r, g.predicted_yes_radius);
  const bool budget_ok = centers.size() <= g.center_budget;
  const bool ok = radius_ok && budget_ok;
  out << "verify=" << (ok ? "pass" : "fail") << " kind=" << to_string(g.kind) << " centers=" << centers.size()
      << " center_budget=" << g.center_budget << " cover_radius=" << kcenter::cli::detail::dist_text(r)
      << " yes_radius=" << g.predicted_yes_radius << '\n';
  return ok ? kExitOk : kExitFailure;
}

inline int run_verify(const VerifyOptions& o, std::ostream& out) {
  if (!o.gadget_prefix.empty()) return verify_gadget(o, out);
  require(!o.graph_path.empty(), ErrorCode::InvalidArgument, "verify needs --graph or --gadget");
  return verify_graph_cover(o, out);
}

}  // namespace kcenter::cli
