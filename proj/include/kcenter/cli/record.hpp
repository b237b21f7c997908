#pragma once

#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "kcenter/core/error.hpp"
#include "kcenter/core/types.hpp"

namespace kcenter::cli {

/// One solver run, printed as a single key=value line or a single JSON object.
struct RunRecord {
  std::string instance;  // bench label, empty for plain solve
  std::string algo;
  std::size_t k = 0;
  std::optional<std::size_t> l;
  std::uint64_t seed = 0;
  unsigned trials = 1;
  std::size_t n = 0;
  std::size_t m = 0;
  Dist max_weight = 1;
  std::optional<Radius> upper_bound;
  std::size_t probes = 0;
  std::string status = "ok";  // "ok" or an error code name
  Dist radius = 0;
  std::vector<Vertex> centers;
  std::optional<Dist> exact;
  std::optional<bool> bound_satisfied;
  std::string via;
  std::optional<double> elapsed_ms;
};

/// Declared mixed (alpha, beta) guarantee of an algorithm id.
struct ApproxBound {
  double alpha = 1.0;
  double beta = 0.0;
};

inline ApproxBound declared_bound(const std::string& algo, std::size_t k, std::optional<std::size_t> l,
                                  Dist max_weight) {
  if (algo == "exact") return {1.0, 0.0};
  if (algo == "gonzalez") return {2.0, 0.0};
  if (algo == "c2-53") return {5.0 / 3.0, 2.0 / 3.0};
  if (algo == "k-32") return {1.5, 0.5};
  if (algo == "k-2k") {
    const double q = 1.0 / static_cast<double>(2 * k - 1);
    return {2.0 - q, 1.0 - q};
  }
  if (algo == "k-2l") {
    require(l.has_value(), ErrorCode::InvalidArgument, "k-2l needs l");
    const double q = 1.0 / static_cast<double>(2 * *l);
    return {2.0 - q, 1.0 - q};
  }
  if (algo == "w3-74") return {1.75, static_cast<double>(max_weight)};
  fail(ErrorCode::InvalidArgument, "unknown algorithm '" + algo + "'");
}

inline bool bound_holds(Dist radius, Dist exact, ApproxBound b) {
  if (radius == kUnreachable || exact == kUnreachable) return radius == exact;
  return static_cast<double>(radius) <= b.alpha * static_cast<double>(exact) + b.beta + 1e-9;
}

namespace detail {

inline std::string dist_text(Dist d) { return d == kUnreachable ? "inf" : std::to_string(d); }

inline std::string join_ids(const std::vector<Vertex>& ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(ids[i]);
  }
  return out;
}

template <typename T>
std::string opt_text(const std::optional<T>& v) {
  return v ? std::to_string(*v) : "-";
}

}  // namespace detail

inline std::string format_kv(const RunRecord& r) {
  std::string s;
  if (!r.instance.empty()) s += "instance=" + r.instance + ' ';
  s += "algo=" + r.algo + " k=" + std::to_string(r.k) + " l=" + detail::opt_text(r.l);
  s += " seed=" + std::to_string(r.seed) + " trials=" + std::to_string(r.trials);
  s += " n=" + std::to_string(r.n) + " m=" + std::to_string(r.m) + " M=" + std::to_string(r.max_weight);
  s += " U=" + detail::opt_text(r.upper_bound) + " probes=" + std::to_string(r.probes);
  s += " status=" + r.status;
  if (r.status == "ok") {
    s += " radius=" + detail::dist_text(r.radius) + " centers=" + detail::join_ids(r.centers);
    s += " exact=" + (r.exact ? detail::dist_text(*r.exact) : std::string("-"));
    s += " bound_satisfied=" + (r.bound_satisfied ? std::string(*r.bound_satisfied ? "true" : "false") : "-");
    s += " via=" + r.via;
  }
  if (r.elapsed_ms) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", *r.elapsed_ms);
    s += " elapsed_ms=";
    s += buf;
  }
  return s;
}

inline std::string format_json(const RunRecord& r) {
  using nlohmann::ordered_json;
  ordered_json j;
  if (!r.instance.empty()) j["instance"] = r.instance;
  j["algo"] = r.algo;
  j["k"] = r.k;
  j["l"] = r.l ? ordered_json(*r.l) : ordered_json(nullptr);
  j["seed"] = r.seed;
  j["trials"] = r.trials;
  j["n"] = r.n;
  j["m"] = r.m;
  j["M"] = r.max_weight;
  j["U"] = r.upper_bound ? ordered_json(*r.upper_bound) : ordered_json(nullptr);
  j["probes"] = r.probes;
  j["status"] = r.status;
  if (r.status == "ok") {
    auto dist_json = [](Dist d) { return d == kUnreachable ? ordered_json("inf") : ordered_json(d); };
    j["radius"] = dist_json(r.radius);
    j["centers"] = r.centers;
    j["exact"] = r.exact ? dist_json(*r.exact) : ordered_json(nullptr);
    j["bound_satisfied"] = r.bound_satisfied ? ordered_json(*r.bound_satisfied) : ordered_json(nullptr);
    j["via"] = r.via;
  }
  if (r.elapsed_ms) j["elapsed_ms"] = *r.elapsed_ms;
  return j.dump();
}

inline std::string format_record(const RunRecord& r, bool json) { return json ? format_json(r) : format_kv(r); }

}  // namespace kcenter::cli
