#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "kcenter/cli/commands.hpp"
#include "kcenter/cli/files.hpp"
#include "kcenter/cli/solve.hpp"

namespace kcenter::cli {

// Plan file, one directive per line ('#' comments):
//   instance <label> cycle|path|star|complete n=<n> [M=<w>] [seed=<s>]
//   instance <label> grid w=<w> h=<h> [M=<w>] [seed=<s>]
//   instance <label> er n=<n> p=<p> [M=<w>] [seed=<s>]
//   instance <label> file <path>          (relative to the plan file)
//   algo <id> k=<k> [l=<l>] [trials=<t>] [omega=<w>] [c=<c>] [schedule=<s>] [sampling=<s>]
//   seeds <s1> <s2> ...
//   with_exact true|false                 (default true)

struct BenchInstance {
  std::string label;
  std::optional<RandomGraphOptions> random;
  std::string path;
};

struct BenchPlan {
  std::vector<BenchInstance> instances;
  std::vector<SolveOptions> algos;
  std::vector<std::uint64_t> seeds;
  bool with_exact = true;
};

namespace detail {

inline std::map<std::string, std::string> plan_kv(std::istringstream& ss, std::size_t lineno) {
  std::string rest, tok;
  while (ss >> tok) rest += tok + ' ';
  try {
    return parse_kv_line(rest);
  } catch (const Error& e) {
    fail(ErrorCode::ParseError, "plan line " + std::to_string(lineno) + ": " + e.what());
  }
}

inline bool parse_bool(const std::string& s, std::size_t lineno) {
  if (s == "true" || s == "1") return true;
  if (s == "false" || s == "0") return false;
  fail(ErrorCode::ParseError, "plan line " + std::to_string(lineno) + ": expected true or false");
}

}  // namespace detail

inline BenchPlan parse_plan(std::istream& in, const std::filesystem::path& base_dir = {}) {
  BenchPlan plan;
  std::string line;
  std::size_t lineno = 0;
  auto where = [&] { return "plan line " + std::to_string(lineno) + ": "; };
  while (kcenter::detail::next_data_line(in, line, lineno)) {
    std::istringstream ss(line);
    std::string directive;
    ss >> directive;
    if (directive == "instance") {
      BenchInstance inst;
      std::string kind;
      require(static_cast<bool>(ss >> inst.label >> kind), ErrorCode::ParseError, where() + "instance needs a label and kind");
      if (kind == "file") {
        std::string path;
        require(static_cast<bool>(ss >> path), ErrorCode::ParseError, where() + "file instance needs a path");
        std::filesystem::path p(path);
        inst.path = (p.is_relative() && !base_dir.empty() ? base_dir / p : p).string();
      } else {
        RandomGraphOptions r;
        r.kind = kind;
        for (const auto& [key, value] : detail::plan_kv(ss, lineno)) {
          const std::string what = where() + key;
          if (key == "n") r.n = parse_u64(value, what);
          else if (key == "w") r.w = parse_u64(value, what);
          else if (key == "h") r.h = parse_u64(value, what);
          else if (key == "p") r.p = parse_double(value, what);
          else if (key == "seed") r.seed = parse_u64(value, what);
          else if (key == "M") r.max_weight = static_cast<Dist>(parse_u64(value, what));
          else fail(ErrorCode::ParseError, where() + "unknown instance key '" + key + "'");
        }
        inst.random = r;
      }
      plan.instances.push_back(std::move(inst));
    } else if (directive == "algo") {
      SolveOptions o;
      require(static_cast<bool>(ss >> o.algo), ErrorCode::ParseError, where() + "algo needs an id");
      bool known = false;
      for (const auto& id : algorithm_ids()) known = known || id == o.algo;
      require(known, ErrorCode::ParseError, where() + "unknown algorithm '" + o.algo + "'");
      const auto kv = detail::plan_kv(ss, lineno);
      require(kv.count("k") > 0, ErrorCode::ParseError, where() + "algo needs k=<k>");
      for (const auto& [key, value] : kv) {
        const std::string what = where() + key;
        if (key == "k") o.k = parse_u64(value, what);
        else if (key == "l") o.l = parse_u64(value, what);
        else if (key == "trials") o.trials = static_cast<unsigned>(parse_u64(value, what));
        else if (key == "omega") o.omega = parse_double(value, what);
        else if (key == "c") o.sample_const = parse_double(value, what);
        else if (key == "schedule") o.schedule = value;
        else if (key == "sampling") o.sampling = value;
        else fail(ErrorCode::ParseError, where() + "unknown algo key '" + key + "'");
      }
      plan.algos.push_back(std::move(o));
    } else if (directive == "seeds") {
      std::string tok;
      while (ss >> tok) plan.seeds.push_back(parse_u64(tok, where() + "seed"));
    } else if (directive == "with_exact") {
      std::string v;
      ss >> v;
      plan.with_exact = detail::parse_bool(v, lineno);
    } else {
      fail(ErrorCode::ParseError, where() + "unknown directive '" + directive + "'");
    }
  }
  require(!plan.instances.empty(), ErrorCode::ParseError, "plan lists no instance");
  require(!plan.algos.empty(), ErrorCode::ParseError, "plan lists no algo");
  if (plan.seeds.empty()) plan.seeds.push_back(1);
  return plan;
}

inline BenchPlan read_plan_file(const std::string& path) {
  auto in = open_input(path);
  return parse_plan(in, std::filesystem::path(path).parent_path());
}

struct BenchOptions {
  unsigned threads = 1;
  bool json = false;
  bool timing = true;
  std::optional<std::uint64_t> budget;
};

struct BenchAggregate {
  std::string algo;
  std::size_t k = 0;
  std::optional<std::size_t> l;
  std::size_t runs = 0;
  std::size_t ok = 0;
  std::size_t judged = 0;     // runs with an exact radius
  std::size_t satisfied = 0;  // judged runs within the declared bound
  double ratio_sum = 0;
  std::size_t ratio_count = 0;

  std::optional<double> success_rate() const {
    if (judged == 0) return std::nullopt;
    return static_cast<double>(satisfied) / static_cast<double>(judged);
  }
  std::optional<double> mean_ratio() const {
    if (ratio_count == 0) return std::nullopt;
    return ratio_sum / static_cast<double>(ratio_count);
  }
};

struct BenchResult {
  std::vector<RunRecord> records;  // instance-major, then algo, then seed
  std::vector<BenchAggregate> aggregates;  // one per algo line
};

/// Runs the full grid. Records land in plan order whatever the thread count.
inline BenchResult run_bench(const BenchPlan& plan, const BenchOptions& opts) {
  std::vector<Graph> graphs;
  for (const auto& inst : plan.instances) {
    graphs.push_back(inst.random ? make_random_graph(*inst.random) : read_graph_file(inst.path));
  }
  const std::size_t per_instance = plan.algos.size() * plan.seeds.size();
  const std::size_t total = plan.instances.size() * per_instance;
  BenchResult out;
  out.records.resize(total);

  auto run_one = [&](std::size_t idx) {
    const std::size_t i = idx / per_instance;
    const std::size_t a = (idx % per_instance) / plan.seeds.size();
    const std::size_t s = idx % plan.seeds.size();
    SolveOptions o = plan.algos[a];
    o.seed = plan.seeds[s];
    o.with_exact = plan.with_exact;
    o.timing = opts.timing;
    o.budget = opts.budget;
    RunRecord rec;
    try {
      rec = solve(graphs[i], o);
    } catch (const Error& e) {
      rec.algo = o.algo;
      rec.k = o.k;
      rec.l = o.algo == "k-2l" ? o.l : std::nullopt;
      rec.seed = o.seed;
      rec.trials = o.trials;
      rec.n = graphs[i].n();
      rec.m = graphs[i].m();
      rec.max_weight = graphs[i].max_weight();
      rec.status = std::string(to_string(e.code()));
    }
    rec.instance = plan.instances[i].label;
    out.records[idx] = std::move(rec);
  };

  const unsigned threads = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(total)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t idx = next++; idx < total; idx = next++) run_one(idx);
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  for (const auto& algo : plan.algos) {
    BenchAggregate agg;
    agg.algo = algo.algo;
    agg.k = algo.k;
    agg.l = algo.algo == "k-2l" ? algo.l : std::nullopt;
    out.aggregates.push_back(agg);
  }
  for (std::size_t idx = 0; idx < total; ++idx) {
    const RunRecord& r = out.records[idx];
    BenchAggregate& agg = out.aggregates[(idx % per_instance) / plan.seeds.size()];
    ++agg.runs;
    if (r.status != "ok") continue;
    ++agg.ok;
    if (r.bound_satisfied) {
      ++agg.judged;
      agg.satisfied += *r.bound_satisfied ? 1 : 0;
    }
    if (r.exact && *r.exact != kUnreachable && r.radius != kUnreachable) {
      if (*r.exact > 0) {
        agg.ratio_sum += static_cast<double>(r.radius) / static_cast<double>(*r.exact);
        ++agg.ratio_count;
      } else if (r.radius == 0) {
        agg.ratio_sum += 1.0;
        ++agg.ratio_count;
      }
    }
  }
  return out;
}

inline std::string format_aggregate(const BenchAggregate& a, bool json) {
  auto fixed = [](std::optional<double> v) {
    if (!v) return std::string("-");
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", *v);
    return std::string(buf);
  };
  if (json) {
    nlohmann::ordered_json j;
    j["aggregate"] = a.algo;
    j["k"] = a.k;
    j["l"] = a.l ? nlohmann::ordered_json(*a.l) : nlohmann::ordered_json(nullptr);
    j["runs"] = a.runs;
    j["ok"] = a.ok;
    j["judged"] = a.judged;
    j["success_rate"] = a.success_rate() ? nlohmann::ordered_json(*a.success_rate()) : nlohmann::ordered_json(nullptr);
    j["mean_ratio"] = a.mean_ratio() ? nlohmann::ordered_json(*a.mean_ratio()) : nlohmann::ordered_json(nullptr);
    return j.dump();
  }
  return "aggregate algo=" + a.algo + " k=" + std::to_string(a.k) + " l=" + kcenter::cli::detail::opt_text(a.l) +
         " runs=" + std::to_string(a.runs) + " ok=" + std::to_string(a.ok) + " judged=" + std::to_string(a.judged) +
         " success_rate=" + fixed(a.success_rate()) + " mean_ratio=" + fixed(a.mean_ratio());
}

inline void print_bench(const BenchResult& r, bool json, std::ostream& out) {
  for (const auto& rec : r.records) out << format_record(rec, json) << '\n';
  for (const auto& agg : r.aggregates) out << format_aggregate(agg, json) << '\n';
}

}  // namespace kcenter::cli
