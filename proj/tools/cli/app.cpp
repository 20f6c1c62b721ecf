#include "cli/app.hpp"

#include <algorithm>
#include <sstream>

#include <CLI11.hpp>

#include "cli/bench.hpp"
#include "cli/io.hpp"
#include "cli/solve.hpp"
#include "mve/errors.hpp"
#include "mve/format.hpp"
#include "mve/generators.hpp"
#include "mve/kernel.hpp"

namespace mve::cli {
namespace {

struct SolveArgs {
  std::string file;
  std::string variant = "decision";
  std::string kernelize;
  std::string trace_out;
  SolveOptions options;
};

struct GenArgs {
  std::string input;
  std::string output;
  std::string family = "erdos-renyi";
  RandomParams params;
  std::uint64_t seed = 0;
  std::int64_t h = 0;
  Length x = 2;
  std::optional<std::int64_t> multiplicity;
};

struct VerifyArgs {
  std::string instance;
  std::string solution;
  std::string trace;
  std::optional<std::int64_t> k;
  std::optional<Length> ell;
};

struct BenchArgs {
  std::string dir;
  std::string algorithms = "auto";
  std::string variant = "decision";
  std::string csv;
  unsigned jobs = 1;
  SolveOptions options;
};

struct KernelArgs {
  std::string file;
  std::string trace_out;
};

Instance load_instance(const std::string& path) { return parse_instance(read_file(path)); }

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    write_file(path, text);
  }
}

Variant variant_or_throw(const std::string& name) {
  auto v = parse_variant(name);
  if (!v) throw UsageError("unknown variant '" + name + "'");
  return *v;
}

void add_solver_flags(CLI::App* cmd, SolveOptions& o, std::string& variant) {
  cmd->add_option("--variant", variant, "decision | mincost | maxlength");
  cmd->add_option("--k", o.k, "Deletion budget (overrides the file)");
  cmd->add_option("--ell", o.ell, "Target distance (overrides the file)");
  cmd->add_option("--seed", o.seed, "Accepted for reproducibility; all solvers are deterministic");
  cmd->add_option("--timeout-ms", o.timeout_ms, "Cooperative time limit");
  cmd->add_option("--c", o.c, "Exponent constant for paramapprox");
  cmd->add_flag("--omit-timing", o.omit_timing, "Leave wall-clock fields out of the output");
}

int do_solve(SolveArgs& a, std::ostream& out) {
  a.options.variant = variant_or_throw(a.variant);
  if (a.kernelize == "on") a.options.kernelize = true;
  else if (a.kernelize == "off") a.options.kernelize = false;
  else if (!a.kernelize.empty()) throw UsageError("--kernelize takes on or off");
  const Instance inst = load_instance(a.file);
  const SolveOutput result = solve(inst, a.options);
  out << result.result.dump(2) << '\n';
  if (!a.trace_out.empty()) {
    if (!result.trace) throw UsageError("--trace-out needs a kernelized run");
    write_file(a.trace_out, trace_to_json(*result.trace).dump(2) + "\n");
  }
  return result.timed_out ? kFail : kOk;
}

int do_kernel(const KernelArgs& a, std::ostream& out) {
  const Instance inst = load_instance(a.file);
  const KernelResult kernel = kernelize(inst);
  out << emit_instance(kernel.instance);
  if (!a.trace_out.empty()) write_file(a.trace_out, trace_to_json(kernel.trace).dump(2) + "\n");
  return kOk;
}

int do_gen(const std::string& which, const GenArgs& a, std::ostream& out) {
  if (which == "random") {
    const auto family = parse_family(a.family);
    if (!family) throw UsageError("unknown family '" + a.family + "'");
    emit(a.output, emit_instance(gen_random(*family, a.params, a.seed)), out);
  } else if (which == "vc") {
    emit(a.output, emit_instance(gen_vc_reduction(parse_tripartite(read_file(a.input)), a.h)), out);
  } else if (which == "gap") {
    const GapInstance gap = gen_gap_reduction(parse_tripartite(read_file(a.input)), a.h, a.x);
    emit(a.output,
         "# yes_threshold " + std::to_string(gap.yes_threshold) + "\n# no_threshold " +
             std::to_string(gap.no_threshold) + "\n" + emit_instance(gap.instance),
         out);
  } else if (which == "subdivide") {
    emit(a.output, emit_instance(gen_subdivision(load_instance(a.input))), out);
  } else if (which == "split") {
    emit(a.output, emit_instance(gen_split_reduction(load_instance(a.input), a.multiplicity)), out);
  } else if (which == "complete") {
    emit(a.output, emit_instance(gen_complete_reduction(load_instance(a.input))), out);
  }
  return kOk;
}

// Solution edges may be 1-based ids or [u, v] pairs of 1-based vertices.
// Returns nullopt when an entry names no edge of the graph.
std::optional<std::vector<EdgeId>> solution_edges(const Graph& g, const json& list) {
  std::vector<EdgeId> ids;
  for (const auto& item : list) {
    if (item.is_array() && item.size() == 2) {
      const auto u = item[0].get<std::int64_t>() - 1;
      const auto v = item[1].get<std::int64_t>() - 1;
      if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count() || u == v) return std::nullopt;
      const auto e = g.find_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
      if (!e) return std::nullopt;
      ids.push_back(*e);
    } else if (item.is_number_integer()) {
      const auto id = item.get<std::int64_t>() - 1;
      if (id < 0 || id >= g.edge_count()) return std::nullopt;
      ids.push_back(static_cast<EdgeId>(id));
    } else {
      throw InputError("solution_edges entries must be edge ids or [u, v] pairs");
    }
  }
  return ids;
}

int do_verify(const VerifyArgs& a, std::ostream& out) {
  Instance inst = load_instance(a.instance);
  json sol;
  try {
    sol = json::parse(read_file(a.solution));
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed solution JSON: ") + e.what());
  }
  if (!sol.is_object() || !sol.contains("solution_edges")) {
    throw InputError("solution JSON needs a solution_edges array");
  }
  if (sol.contains("k") && sol["k"].is_number_integer()) inst = inst.with_budget(sol["k"].get<std::int64_t>());
  if (sol.contains("ell") && sol["ell"].is_number_integer()) inst = inst.with_target(sol["ell"].get<Length>());
  if (a.k) inst = inst.with_budget(*a.k);
  if (a.ell) inst = inst.with_target(*a.ell);

  json report{{"schema", 1}, {"k", inst.k}, {"ell", inst.ell}};
  Verdict verdict = Verdict::kPass;
  const Graph* target = &inst.graph;
  std::optional<Instance> kernel;
  std::optional<KernelTrace> trace;
  if (!a.trace.empty()) {
    json tj;
    try {
      tj = json::parse(read_file(a.trace));
    } catch (const json::parse_error& e) {
      throw InputError(std::string("malformed trace JSON: ") + e.what());
    }
    trace = trace_from_json(tj);
    try {
      Graph replayed = replay_trace(inst, *trace);
      report["trace"] = "consistent";
      const Vertex ks = static_cast<Vertex>(std::find(trace->vertex_origin.begin(), trace->vertex_origin.end(), inst.s) - trace->vertex_origin.begin());
      const Vertex kt = static_cast<Vertex>(std::find(trace->vertex_origin.begin(), trace->vertex_origin.end(), inst.t) - trace->vertex_origin.begin());
      kernel.emplace(std::move(replayed), ks, kt, inst.k, inst.ell);
      target = &kernel->graph;
    } catch (const ContractViolation& e) {
      report["trace"] = "inconsistent";
      report["verdict"] = "Fail";
      report["detail"] = e.what();
      out << report.dump(2) << '\n';
      return kFail;
    }
  }

  const auto ids = solution_edges(*target, sol["solution_edges"]);
  if (!ids) {
    verdict = Verdict::kEdgeNotInGraph;
  } else {
    Solution s = make_solution(*target, kernel ? kernel->s : inst.s, kernel ? kernel->t : inst.t, *ids);
    if (kernel) s = lift_solution(inst, *trace, s);
    Solution claimed = s;
    if (!kernel && sol.contains("distance_after") && !sol["distance_after"].is_null()) {
      claimed.achieved_distance = distance_from_json(sol["distance_after"]);
    }
    verdict = check_solution(inst, claimed);
    report["cardinality"] = s.cardinality();
    report["distance"] = distance_to_json(s.achieved_distance);
    report["solution_edges"] = edges_to_json(s.deleted_edges);
  }
  report["verdict"] = verdict == Verdict::kPass ? "Pass" : "Fail";
  if (verdict != Verdict::kPass) report["reason"] = std::string(to_string(verdict));
  out << report.dump(2) << '\n';
  return verdict == Verdict::kPass ? kOk : kFail;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int do_bench(BenchArgs& a, std::ostream& out, std::ostream& err) {
  BenchOptions opt;
  opt.algorithms = split_list(a.algorithms);
  if (opt.algorithms.empty()) throw UsageError("--algs needs at least one algorithm");
  for (const auto& alg : opt.algorithms) {
    const auto& names = algorithm_names();
    if (std::find(names.begin(), names.end(), alg) == names.end()) {
      throw UsageError("unknown algorithm '" + alg + "'");
    }
  }
  opt.jobs = a.jobs;
  opt.solve = a.options;
  opt.solve.variant = variant_or_throw(a.variant);
  const auto rows = run_bench(a.dir, opt, err);
  const std::string csv = bench_csv(rows, a.options.omit_timing);
  if (a.csv == "-") {
    out << csv;
    return kOk;
  }
  out << bench_table(rows);
  if (!a.csv.empty()) write_file(a.csv, csv);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Shortest-path most-vital-edges solver", "mve"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "mve 0.1.0");

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance and print a JSON result");
  solve_cmd->add_option("file", solve_args.file, "Instance file")->required();
  solve_cmd->add_option("--alg", solve_args.options.algorithm, "Algorithm")
      ->check(CLI::IsMember(algorithm_names()));
  solve_cmd->add_option("--kernelize", solve_args.kernelize, "on | off");
  solve_cmd->add_option("--trace-out", solve_args.trace_out, "Write the kernel trace as JSON");
  add_solver_flags(solve_cmd, solve_args.options, solve_args.variant);

  KernelArgs kernel_args;
  auto* kernel_cmd = app.add_subcommand("kernel", "Print the reduced instance");
  kernel_cmd->add_option("file", kernel_args.file, "Instance file")->required();
  kernel_cmd->add_option("--trace-out", kernel_args.trace_out, "Write the kernel trace as JSON");

  GenArgs gen_args;
  auto* gen_cmd = app.add_subcommand("gen", "Generate instances");
  gen_cmd->require_subcommand(1);
  auto* gen_random_cmd = gen_cmd->add_subcommand("random", "Random instance family");
  gen_random_cmd->add_option("--family", gen_args.family,
                             "erdos-renyi | series-parallel | cluster-plus-x | tree-plus-f-edges");
  gen_random_cmd->add_option("--n", gen_args.params.n, "Vertices");
  gen_random_cmd->add_option("--m", gen_args.params.m, "Edges (series-parallel)");
  gen_random_cmd->add_option("--p", gen_args.params.p, "Edge probability");
  gen_random_cmd->add_option("--x", gen_args.params.x, "Cluster deletion set size");
  gen_random_cmd->add_option("--f", gen_args.params.f, "Extra edges over a tree");
  gen_random_cmd->add_option("--max-length", gen_args.params.max_length, "Largest edge length");
  gen_random_cmd->add_option("--k", gen_args.params.k, "Budget");
  gen_random_cmd->add_option("--ell", gen_args.params.ell, "Target");
  gen_random_cmd->add_option("--seed", gen_args.seed, "Seed");
  auto* gen_vc = gen_cmd->add_subcommand("vc", "Vertex-cover reduction from a tripartite graph");
  auto* gen_gap = gen_cmd->add_subcommand("gap", "Gap reduction from a tripartite graph");
  for (auto* cmd : {gen_vc, gen_gap}) {
    cmd->add_option("input", gen_args.input, "Tripartite graph file")->required();
    cmd->add_option("--cover", gen_args.h, "Vertex cover size h")->required();
  }
  gen_gap->add_option("--x", gen_args.x, "Gadget scale (>= 2)");
  auto* gen_sub = gen_cmd->add_subcommand("subdivide", "Subdivide every edge");
  auto* gen_split = gen_cmd->add_subcommand("split", "Split-graph reduction");
  auto* gen_complete = gen_cmd->add_subcommand("complete", "Complete-graph reduction");
  for (auto* cmd : {gen_sub, gen_split, gen_complete}) {
    cmd->add_option("input", gen_args.input, "Instance file")->required();
  }
  gen_split->add_option("--multiplicity", gen_args.multiplicity, "Copies per edge (default n^2)");
  for (auto* cmd : {gen_random_cmd, gen_vc, gen_gap, gen_sub, gen_split, gen_complete}) {
    cmd->add_option("-o,--output", gen_args.output, "Output file (default stdout)");
  }

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Check a solution against an instance");
  verify_cmd->add_option("instance", verify_args.instance, "Instance file")->required();
  verify_cmd->add_option("solution", verify_args.solution, "Solution JSON")->required();
  verify_cmd->add_option("--trace", verify_args.trace, "Kernel trace; solution edges are kernel edges");
  verify_cmd->add_option("--k", verify_args.k, "Budget override");
  verify_cmd->add_option("--ell", verify_args.ell, "Target override");

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "Run algorithms over a directory of instances");
  bench_cmd->add_option("dir", bench_args.dir, "Corpus directory")->required();
  bench_cmd->add_option("--algs", bench_args.algorithms, "Comma-separated algorithms");
  bench_cmd->add_option("--jobs", bench_args.jobs, "Worker threads")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--csv", bench_args.csv, "CSV output file, or - for CSV on stdout");
  add_solver_flags(bench_cmd, bench_args.options, bench_args.variant);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (solve_cmd->parsed()) return do_solve(solve_args, out);
    if (kernel_cmd->parsed()) return do_kernel(kernel_args, out);
    if (verify_cmd->parsed()) return do_verify(verify_args, out);
    if (bench_cmd->parsed()) return do_bench(bench_args, out, err);
    for (auto* cmd : gen_cmd->get_subcommands()) {
      if (cmd->parsed()) return do_gen(cmd->get_name(), gen_args, out);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "not applicable: " << e.what() << '\n';
    return kUsage;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kParse;
  } catch (const json::exception& e) {
    err << "input error: " << e.what() << '\n';
    return kParse;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kParse;
  }
  return kUsage;
}

}  // namespace mve::cli
