#pragma once

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kcenter/cli/bench.hpp"
#include "kcenter/cli/commands.hpp"
#include "kcenter/cli/files.hpp"
#include "kcenter/cli/solve.hpp"

namespace kcenter::cli {

inline Graph read_graph_arg(const std::string& path) {
  if (path == "-") return read_graph(std::cin);
  return read_graph_file(path);
}

inline void write_graph_arg(const std::string& path, const Graph& g, std::ostream& out) {
  if (path == "-") {
    write_graph(out, g);
  } else {
    write_graph_file(path, g);
  }
}

/// Full command line front end. `args` excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"k-center approximation laboratory"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate instances");
  gen->require_subcommand(1);

  RandomGraphOptions rnd;
  std::string rnd_out = "-";
  auto* gen_random = gen->add_subcommand("random", "seeded random or structured graph");
  gen_random->add_option("--kind", rnd.kind, "cycle | path | grid | star | complete | er")->required();
  gen_random->add_option("--n", rnd.n, "vertex count (leaf count for star)");
  gen_random->add_option("--width", rnd.w, "grid width");
  gen_random->add_option("--height", rnd.h, "grid height");
  gen_random->add_option("--p", rnd.p, "edge probability for er");
  gen_random->add_option("--seed", rnd.seed);
  gen_random->add_option("--max-weight", rnd.max_weight, "draw edge weights from [1, M]");
  gen_random->add_option("--out", rnd_out, "graph file, '-' for stdout");

  GadgetGenOptions gad;
  std::string gad_out;
  std::optional<std::size_t> gad_k;
  auto add_gadget_opts = [&](CLI::App* sub) {
    sub->add_option("--ell", gad.ell)->required();
    sub->add_option("--k", gad_k, "declared cover size (default: smallest cover)");
    sub->add_option("--setcover", gad.setcover_path);
    sub->add_option("--ov", gad.ov_path);
    sub->add_option("--power", gad.power, "replace A by its g-tuples");
    sub->add_option("--budget", gad.budget);
    sub->add_option("--out", gad_out, "output prefix")->required();
  };
  auto* gen_gadget = gen->add_subcommand("gadget", "recursive lower-bound construction");
  gen_gadget->add_option("--t", gad.t)->required();
  add_gadget_opts(gen_gadget);
  auto* gen_simple = gen->add_subcommand("simple-gadget", "single gadget with tails");
  add_gadget_opts(gen_simple);

  // solve
  SolveOptions sol;
  std::string sol_graph;
  bool sol_json = false;
  bool sol_no_timing = false;
  auto* solve_cmd = app.add_subcommand("solve", "run one algorithm");
  solve_cmd->add_option("--graph", sol_graph, "graph file, '-' for stdin")->required();
  solve_cmd->add_option("--algo", sol.algo)->required()->check(CLI::IsMember(algorithm_ids()));
  solve_cmd->add_option("--k", sol.k)->required();
  solve_cmd->add_option("--ell", sol.l);
  solve_cmd->add_option("--seed", sol.seed);
  solve_cmd->add_option("--trials", sol.trials);
  solve_cmd->add_option("--omega", sol.omega);
  solve_cmd->add_option("--sample-const", sol.sample_const);
  solve_cmd->add_option("--budget", sol.budget);
  solve_cmd->add_option("--schedule", sol.schedule, "default | combinatorial | omega2 | omega-general");
  solve_cmd->add_option("--sampling", sol.sampling, "default | shared | per-level");
  solve_cmd->add_flag("--with-exact", sol.with_exact, "also run the exact oracle");
  solve_cmd->add_flag("--json", sol_json);
  solve_cmd->add_flag("--no-timing", sol_no_timing, "omit elapsed_ms");

  // verify
  VerifyOptions ver;
  std::optional<std::uint64_t> ver_radius;
  auto* verify_cmd = app.add_subcommand("verify", "check a cover certificate");
  verify_cmd->add_option("--graph", ver.graph_path);
  verify_cmd->add_option("--centers", ver.centers_path, "file of center ids");
  verify_cmd->add_option("--center-list", ver.centers_inline, "comma separated center ids");
  verify_cmd->add_option("--record", ver.record_path, "file holding a solve record");
  verify_cmd->add_option("--radius", ver_radius);
  verify_cmd->add_option("--gadget", ver.gadget_prefix, "gadget output prefix");
  verify_cmd->add_option("--cover", ver.cover_path, "file of set cover a-ids");

  // bench
  std::string plan_path;
  BenchOptions bench;
  bool bench_no_timing = false;
  auto* bench_cmd = app.add_subcommand("bench", "run a plan of algorithm x instance x seed");
  bench_cmd->add_option("--plan", plan_path)->required();
  bench_cmd->add_option("--threads", bench.threads);
  bench_cmd->add_option("--budget", bench.budget);
  bench_cmd->add_flag("--json", bench.json);
  bench_cmd->add_flag("--no-timing", bench_no_timing, "omit elapsed_ms");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen_random) {
      write_graph_arg(rnd_out, make_random_graph(rnd), out);
      return kExitOk;
    }
    if (*gen_gadget || *gen_simple) {
      gad.simple = static_cast<bool>(*gen_simple);
      gad.k = gad_k;
      const GadgetOutput g = generate_gadget(gad);
      write_gadget_files(gad_out, g);
      out << manifest_line(g) << " n=" << g.graph.n() << " m=" << g.graph.m() << '\n';
      return kExitOk;
    }
    if (*solve_cmd) {
      sol.timing = !sol_no_timing;
      const RunRecord rec = solve(read_graph_arg(sol_graph), sol);
      out << format_record(rec, sol_json) << '\n';
      return kExitOk;
    }
    if (*verify_cmd) {
      if (ver_radius) ver.radius = static_cast<Radius>(*ver_radius);
      return run_verify(ver, out);
    }
    if (*bench_cmd) {
      bench.timing = !bench_no_timing;
      print_bench(run_bench(read_plan_file(plan_path), bench), bench.json, out);
      return kExitOk;
    }
  } catch (const kcenter::Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

inline int run_cli(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args, out, err);
}

}  // namespace kcenter::cli
