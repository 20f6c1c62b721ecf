#include "mve/exact.hpp"

#include <algorithm>
#include <set>

#include "mve/errors.hpp"
#include "mve/paths.hpp"

namespace mve {
namespace {

SolveContext& use(SolveContext* ctx, SolveContext& fallback) {
  return ctx != nullptr ? *ctx : fallback;
}

// Lexicographic walk over the size-`r` subsets of {0..m-1}.
bool next_combination(std::vector<EdgeId>& comb, EdgeId m) {
  const auto r = static_cast<EdgeId>(comb.size());
  for (EdgeId i = r - 1; i >= 0; --i) {
    if (comb[i] < m - r + i) {
      ++comb[i];
      for (EdgeId j = i + 1; j < r; ++j) comb[j] = comb[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<Solution> trivial_solution(const Instance& inst) {
  if (inst.distance() >= inst.ell) return make_solution(inst, {});
  const StCut cut = min_st_cut(inst.graph, inst.s, inst.t);
  if (inst.k >= cut.size) return make_solution(inst, cut.edges);
  return std::nullopt;
}

std::optional<Solution> brute_force(const Instance& inst, SolveContext* ctx) {
  SolveContext local;
  SolveContext& c = use(ctx, local);
  const Graph& g = inst.graph;
  const EdgeId m = g.edge_count();
  const auto max_size = static_cast<EdgeId>(std::min<std::int64_t>(inst.k, m));
  EdgeMask mask = g.empty_mask();
  for (EdgeId size = 0; size <= max_size; ++size) {
    std::vector<EdgeId> comb(static_cast<std::size_t>(size));
    for (EdgeId i = 0; i < size; ++i) comb[i] = i;
    do {
      c.tick();
      for (EdgeId e : comb) mask[e] = 1;
      const bool ok = st_distance(g, inst.s, inst.t, &mask) >= inst.ell;
      for (EdgeId e : comb) mask[e] = 0;
      if (ok) return make_solution(inst, comb);
    } while (size > 0 && next_combination(comb, m));
  }
  return std::nullopt;
}

std::optional<Solution> xp_by_max_degree(const Instance& inst, SolveContext* ctx) {
  if (inst.distance() >= inst.ell) return make_solution(inst, {});
  if (inst.k >= inst.graph.degree(inst.s)) {
    std::vector<EdgeId> at_s;
    for (const Arc& a : inst.graph.neighbors(inst.s)) at_s.push_back(a.edge);
    return make_solution(inst, std::move(at_s));
  }
  return brute_force(inst, ctx);
}

namespace {

class SearchTree {
 public:
  SearchTree(const Instance& inst, SolveContext& ctx)
      : inst_(inst), ctx_(ctx), mask_(inst.graph.empty_mask()) {}

  bool run(std::int64_t budget) {
    ctx_.tick();
    const auto path = shortest_path(inst_.graph, inst_.s, inst_.t, &mask_);
    if (!path || path->length >= inst_.ell) {
      ctx_.leaf();
      return true;
    }
    if (budget == 0 || disjoint_short_paths(budget + 1) > budget) {
      ctx_.leaf();
      return false;
    }
    for (EdgeId e : path->edges) {
      mask_[e] = 1;
      chosen_.push_back(e);
      if (run(budget - 1)) return true;
      chosen_.pop_back();
      mask_[e] = 0;
    }
    return false;
  }

  [[nodiscard]] const std::vector<EdgeId>& chosen() const { return chosen_; }

 private:
  // Greedily packed edge-disjoint paths shorter than ell, counted up to
  // `cap`.
  std::int64_t disjoint_short_paths(std::int64_t cap) {
    EdgeMask packed = mask_;
    std::int64_t count = 0;
    while (count < cap) {
      const auto p = shortest_path(inst_.graph, inst_.s, inst_.t, &packed);
      if (!p || p->length >= inst_.ell) break;
      for (EdgeId e : p->edges) packed[e] = 1;
      ++count;
    }
    return count;
  }

  const Instance& inst_;
  SolveContext& ctx_;
  EdgeMask mask_;
  std::vector<EdgeId> chosen_;
};

}  // namespace

std::optional<Solution> search_tree(const Instance& inst, SolveContext* ctx) {
  if (auto trivial = trivial_solution(inst)) return trivial;
  SolveContext local;
  SearchTree tree(inst, use(ctx, local));
  if (!tree.run(inst.k)) return std::nullopt;
  return make_solution(inst, tree.chosen());
}

Solution min_cost(const Instance& inst, const DecisionSolver& solver,
                  SolveContext* ctx) {
  SolveContext local;
  SolveContext& c = use(ctx, local);
  const std::int64_t cut = min_st_cut_size(inst.graph, inst.s, inst.t);
  for (std::int64_t budget = 0; budget <= cut; ++budget) {
    if (auto sol = solver(inst.with_budget(budget), c)) return *sol;
  }
  // Deleting a minimum cut always works; reaching this is a solver bug.
  throw std::logic_error("min_cost: solver rejected the minimum cut budget");
}

Solution max_length(const Instance& inst, const DecisionSolver& solver,
                    SolveContext* ctx) {
  SolveContext local;
  SolveContext& c = use(ctx, local);
  Solution best = make_solution(inst, {});
  while (best.achieved_distance.is_finite()) {
    auto next = solver(inst.with_target(best.achieved_distance.value() + 1), c);
    if (!next) break;
    best = std::move(*next);
  }
  return best;
}

Solution normalize_twins(const Graph& g, Vertex s, Vertex t,
                         const TwinClass& twin_class, const Solution& solution) {
  if (!g.unit_lengths()) {
    throw PreconditionError("normalize_twins requires unit edge lengths");
  }
  const auto& members = twin_class.members;
  if (members.empty()) return solution;
  for (Vertex v : members) {
    if (!g.valid_vertex(v) || v == s || v == t) {
      throw InputError("twin class must avoid s and t");
    }
  }
  if (!is_twin_class(g, members)) throw InputError("not a twin class");
  auto in_class = [&](Vertex v) {
    return std::binary_search(members.begin(), members.end(), v);
  };
  std::set<EdgeId> deleted(solution.deleted_edges.begin(), solution.deleted_edges.end());
  // Deleted neighbors outside the class, per member.
  auto deleted_outside = [&](Vertex v) {
    std::vector<Vertex> out;
    for (const Arc& a : g.neighbors(v)) {
      if (deleted.count(a.edge) != 0 && !in_class(a.to)) out.push_back(a.to);
    }
    return out;
  };
  const auto reference = deleted_outside(members.front());
  const bool uniform = std::all_of(members.begin(), members.end(), [&](Vertex v) {
    return deleted_outside(v) == reference;
  });
  bool inner = false;
  for (Vertex v : members) {
    for (const Arc& a : g.neighbors(v)) {
      if (deleted.count(a.edge) != 0 && in_class(a.to)) inner = true;
    }
  }
  if (uniform && !inner) return solution;

  // Member with the fewest incident deleted edges; ties to the smallest id.
  Vertex pivot = members.front();
  std::size_t pivot_degree = SIZE_MAX;
  for (Vertex v : members) {
    std::size_t d = 0;
    for (const Arc& a : g.neighbors(v)) d += deleted.count(a.edge);
    if (d < pivot_degree) {
      pivot = v;
      pivot_degree = d;
    }
  }
  const auto pattern = deleted_outside(pivot);
  std::vector<EdgeId> result;
  for (EdgeId e : deleted) {
    const Edge& ed = g.edge(e);
    const bool touches_other = (in_class(ed.u) && ed.u != pivot) ||
                               (in_class(ed.v) && ed.v != pivot);
    const bool inside = in_class(ed.u) && in_class(ed.v);
    if (!touches_other && !inside) result.push_back(e);
  }
  for (Vertex v : members) {
    if (v == pivot) continue;
    for (Vertex w : pattern) result.push_back(*g.find_edge(v, w));
  }
  return make_solution(g, s, t, std::move(result));
}

DecisionSolver brute_force_solver() {
  return [](const Instance& inst, SolveContext& ctx) { return brute_force(inst, &ctx); };
}

DecisionSolver search_tree_solver() {
  return [](const Instance& inst, SolveContext& ctx) { return search_tree(inst, &ctx); };
}

DecisionSolver xp_solver() {
  return [](const Instance& inst, SolveContext& ctx) {
    return xp_by_max_degree(inst, &ctx);
  };
}

DecisionSolver cvd_solver(ClusterDecomposition decomposition) {
  return [d = std::move(decomposition)](const Instance& inst, SolveContext& ctx) {
    return cvd_fpt(inst, d, &ctx);
  };
}

}  // namespace mve
