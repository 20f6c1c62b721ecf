#include "cli/solve.hpp"

#include <algorithm>
#include <chrono>

#include "mve/approx.hpp"
#include "mve/errors.hpp"
#include "mve/exact.hpp"
#include "mve/paths.hpp"
#include "mve/poly.hpp"
#include "mve/sp_tree.hpp"
#include "mve/structure.hpp"

namespace mve::cli {

std::optional<Variant> parse_variant(const std::string& name) {
  if (name == "decision") return Variant::kDecision;
  if (name == "mincost") return Variant::kMinCost;
  if (name == "maxlength") return Variant::kMaxLength;
  return std::nullopt;
}

std::string to_string(Variant v) {
  switch (v) {
    case Variant::kDecision: return "decision";
    case Variant::kMinCost: return "mincost";
    case Variant::kMaxLength: return "maxlength";
  }
  return "unknown";
}

const std::vector<std::string>& algorithm_names() {
  static const std::vector<std::string> names{
      "auto", "bruteforce", "searchtree", "xp", "spdp", "cvd",
      "diam2", "complete", "greedy", "paramapprox"};
  return names;
}

namespace {

struct Outcome {
  std::string algorithm;
  json answer;
  std::optional<Solution> solution;  // on the instance that was solved
  json extra = json::object();
};

// Minimum-cardinality solution within budget k: first budget the solver
// accepts, so kernelized and plain runs agree on |S|.
std::optional<Solution> decide_min(const Instance& inst, const DecisionSolver& solver,
                                   SolveContext& ctx) {
  auto full = solver(inst, ctx);
  if (!full) return std::nullopt;
  for (std::int64_t budget = 0; budget < inst.k; ++budget) {
    if (auto sol = solver(inst.with_budget(budget), ctx)) return sol;
  }
  return full;
}

Outcome run_exact(const Instance& inst, Variant variant, const DecisionSolver& solver,
                  SolveContext& ctx) {
  Outcome out;
  switch (variant) {
    case Variant::kDecision: {
      out.solution = decide_min(inst, solver, ctx);
      out.answer = out.solution ? "yes" : "no";
      break;
    }
    case Variant::kMinCost: {
      out.solution = min_cost(inst, solver, &ctx);
      out.answer = out.solution->cardinality();
      break;
    }
    case Variant::kMaxLength: {
      const Distance best = max_length(inst, solver, &ctx).achieved_distance;
      if (best.is_infinite()) {
        out.solution = make_solution(inst, min_st_cut(inst.graph, inst.s, inst.t).edges);
      } else {
        out.solution = min_cost(inst.with_target(best.value()), solver, &ctx);
      }
      out.answer = distance_to_json(best);
      break;
    }
  }
  return out;
}

Outcome run_spdp(const Instance& inst, Variant variant) {
  const auto tree = build_sp_tree(inst.graph, inst.s, inst.t);
  if (!tree) throw PreconditionError("graph is not two-terminal series-parallel for (s, t)");
  Outcome out;
  if (variant == Variant::kMaxLength) {
    auto r = sp_max_length(*tree, inst.graph, inst.k);
    out.answer = distance_to_json(r.distance);
    out.solution = std::move(r.solution);
    return out;
  }
  auto r = sp_min_cost(*tree, inst.graph, inst.ell);
  if (variant == Variant::kMinCost) {
    out.answer = r.min_deletions;
    out.solution = std::move(r.solution);
  } else if (r.min_deletions <= inst.k) {
    out.answer = "yes";
    out.solution = std::move(r.solution);
  } else {
    out.answer = "no";
  }
  return out;
}

bool applies_diameter2(const Instance& inst) {
  return inst.unit_length() && diameter(inst.graph) <= Distance(2) &&
         (inst.ell < 2 || inst.ell > 4 || inst.distance() >= inst.ell);
}

DecisionSolver complete_solver() {
  return [](const Instance& inst, SolveContext&) { return solve_complete_unit(inst); };
}

DecisionSolver diameter2_solver() {
  return [](const Instance& inst, SolveContext& ctx) { return solve_diameter2(inst, &ctx); };
}

class Dispatcher {
 public:
  Dispatcher(const Instance& inst, const SolveOptions& opt, SolveContext& ctx)
      : inst_(inst), opt_(opt), ctx_(ctx) {}

  Outcome run(std::optional<KernelTrace>& trace) {
    const std::string& alg = opt_.algorithm;
    if (alg == "auto") return run_auto(trace);
    const bool reduce = opt_.kernelize.value_or(false);
    if (alg == "bruteforce") return exact(brute_force_solver(), "bruteforce", trace, reduce);
    if (alg == "searchtree") return exact(search_tree_solver(), "searchtree", trace, reduce);
    if (alg == "xp") return exact(xp_solver(), "xp", trace, reduce);
    if (alg == "spdp") return named(run_spdp(inst_, opt_.variant), "spdp");
    if (alg == "cvd") {
      if (!inst_.unit_length()) throw PreconditionError("cvd requires unit edge lengths");
      return named(run_exact(inst_, opt_.variant,
                             cvd_solver(cluster_vertex_deletion_set(inst_.graph)), ctx_),
                   "cvd");
    }
    if (alg == "diam2") {
      if (opt_.variant == Variant::kMaxLength) {
        throw UsageError("diam2 supports the decision and mincost variants");
      }
      return named(run_exact(inst_, opt_.variant, diameter2_solver(), ctx_), "diam2");
    }
    if (alg == "complete") {
      if (opt_.variant == Variant::kMaxLength) {
        throw UsageError("complete supports the decision and mincost variants");
      }
      return named(run_exact(inst_, opt_.variant, complete_solver(), ctx_), "complete");
    }
    if (alg == "greedy") return run_greedy();
    if (alg == "paramapprox") return run_paramapprox();
    throw UsageError("unknown algorithm '" + alg + "'");
  }

 private:
  static Outcome named(Outcome o, std::string name) {
    o.algorithm = std::move(name);
    return o;
  }

  Outcome exact(const DecisionSolver& solver, const std::string& name,
                std::optional<KernelTrace>& trace, bool reduce) {
    if (!reduce) return named(run_exact(inst_, opt_.variant, solver, ctx_), name);
    KernelResult kernel = kernelize(inst_);
    Outcome o = run_exact(kernel.instance, opt_.variant, solver, ctx_);
    if (o.solution) o.solution = lift_solution(inst_, kernel.trace, *o.solution);
    o.extra["kernel"] = {{"vertices", kernel.instance.graph.vertex_count()},
                         {"edges", kernel.instance.graph.edge_count()}};
    trace = std::move(kernel.trace);
    return named(std::move(o), "kernel+" + name);
  }

  Outcome run_auto(std::optional<KernelTrace>& trace) {
    const Variant v = opt_.variant;
    if (v == Variant::kDecision && inst_.distance() >= inst_.ell) {
      Outcome o;
      o.answer = "yes";
      o.solution = make_solution(inst_, {});
      return named(std::move(o), "trivial");
    }
    if (v != Variant::kMaxLength && inst_.unit_length() && inst_.graph.is_complete()) {
      return named(run_exact(inst_, v, complete_solver(), ctx_), "complete");
    }
    if (v != Variant::kMaxLength && applies_diameter2(inst_)) {
      return named(run_exact(inst_, v, diameter2_solver(), ctx_), "diam2");
    }
    if (build_sp_tree(inst_.graph, inst_.s, inst_.t)) return named(run_spdp(inst_, v), "spdp");
    return exact(search_tree_solver(), "searchtree", trace, opt_.kernelize.value_or(true));
  }

  Outcome run_greedy() {
    if (opt_.variant != Variant::kMinCost) throw UsageError("greedy solves the mincost variant");
    auto r = greedy_ell_approx(inst_.graph, inst_.s, inst_.t, inst_.ell);
    Outcome o;
    o.answer = r.solution.cardinality();
    o.extra["lower_bound"] = r.lower_bound;
    o.solution = std::move(r.solution);
    return named(std::move(o), "greedy");
  }

  Outcome run_paramapprox() {
    if (opt_.variant != Variant::kMaxLength) {
      throw UsageError("paramapprox solves the maxlength variant");
    }
    auto r = param_approx_max_length(inst_, opt_.c, &ctx_);
    Outcome o;
    o.answer = distance_to_json(r.solution.achieved_distance);
    const bool optimal = r.certificate.kind == ApproxCertificate::Kind::kOptimal;
    o.extra["certificate"] = optimal ? "optimal" : "approx";
    if (!optimal) o.extra["factor"] = r.certificate.factor;
    o.extra["threshold"] = r.threshold;
    o.solution = std::move(r.solution);
    return named(std::move(o), "paramapprox");
  }

  const Instance& inst_;
  const SolveOptions& opt_;
  SolveContext& ctx_;
};

void check_flags(const SolveOptions& opt) {
  const auto& names = algorithm_names();
  if (std::find(names.begin(), names.end(), opt.algorithm) == names.end()) {
    throw UsageError("unknown algorithm '" + opt.algorithm + "'");
  }
  static const std::vector<std::string> kernelizable{"auto", "bruteforce", "searchtree", "xp"};
  if (opt.kernelize.value_or(false) &&
      std::find(kernelizable.begin(), kernelizable.end(), opt.algorithm) == kernelizable.end()) {
    throw UsageError("--kernelize on is not supported with --alg " + opt.algorithm);
  }
  if (opt.timeout_ms && *opt.timeout_ms < 0) throw UsageError("--timeout-ms must be non-negative");
  if (opt.c <= 0) throw UsageError("--c must be positive");
}

}  // namespace

SolveOutput solve(const Instance& input, const SolveOptions& options) {
  check_flags(options);
  Instance inst = input;
  if (options.k) inst = inst.with_budget(*options.k);
  if (options.ell) inst = inst.with_target(*options.ell);

  const auto start = std::chrono::steady_clock::now();
  SolveContext ctx = options.timeout_ms
                         ? SolveContext(std::chrono::milliseconds(*options.timeout_ms))
                         : SolveContext();
  SolveOutput out;
  Outcome outcome;
  try {
    outcome = Dispatcher(inst, options, ctx).run(out.trace);
  } catch (const Timeout&) {
    out.timed_out = true;
    outcome = Outcome{};
    outcome.algorithm = options.algorithm;
    outcome.answer = "unknown";
    out.trace.reset();
  }
  const auto elapsed = std::chrono::steady_clock::now() - start;

  json& r = out.result;
  r["schema"] = 1;
  r["variant"] = to_string(options.variant);
  r["algorithm"] = outcome.algorithm;
  r["answer"] = outcome.answer;
  r["k"] = inst.k;
  r["ell"] = inst.ell;
  if (outcome.solution) {
    r["solution_edges"] = edges_to_json(outcome.solution->deleted_edges);
    r["distance_after"] = distance_to_json(outcome.solution->achieved_distance);
  } else {
    r["solution_edges"] = json::array();
    r["distance_after"] = nullptr;
  }
  r["nodes_explored"] = ctx.nodes();
  for (const auto& [key, value] : outcome.extra.items()) r[key] = value;
  if (!options.omit_timing) {
    r["wall_ms"] = std::chrono::duration<double, std::milli>(elapsed).count();
  }
  return out;
}

}  // namespace mve::cli
