#include "mve/instance.hpp"

#include <algorithm>

#include "mve/errors.hpp"
#include "mve/paths.hpp"

namespace mve {

Instance::Instance(Graph g, Vertex s_, Vertex t_, std::int64_t k_, Length ell_)
    : graph(std::move(g)), s(s_), t(t_), k(k_), ell(ell_) {
  if (!graph.valid_vertex(s) || !graph.valid_vertex(t)) {
    throw InputError("terminal out of range");
  }
  if (s == t) throw InputError("s and t must differ");
  if (k < 0) throw InputError("budget k must be non-negative");
  if (ell < 1) throw InputError("target ell must be positive");
}

Distance Instance::distance() const { return st_distance(graph, s, t); }

std::optional<Length> Instance::required_increase() const {
  const Distance d = distance();
  if (d.is_infinite()) return std::nullopt;
  return ell - d.value();
}

Instance Instance::with_budget(std::int64_t budget) const {
  Instance copy = *this;
  if (budget < 0) throw InputError("budget k must be non-negative");
  copy.k = budget;
  return copy;
}

Instance Instance::with_target(Length target) const {
  Instance copy = *this;
  if (target < 1) throw InputError("target ell must be positive");
  copy.ell = target;
  return copy;
}

EdgeMask to_mask(const Graph& g, const std::vector<EdgeId>& edges) {
  EdgeMask mask = g.empty_mask();
  for (EdgeId e : edges) {
    if (e < 0 || e >= g.edge_count()) {
      throw ContractViolation("edge id out of range");
    }
    mask[e] = 1;
  }
  return mask;
}

Solution make_solution(const Graph& g, Vertex s, Vertex t,
                       std::vector<EdgeId> edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  const EdgeMask mask = to_mask(g, edges);
  Solution sol;
  sol.achieved_distance = st_distance(g, s, t, &mask);
  sol.deleted_edges = std::move(edges);
  return sol;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "Pass";
    case Verdict::kEdgeNotInGraph: return "EdgeNotInGraph";
    case Verdict::kBudgetExceeded: return "BudgetExceeded";
    case Verdict::kDistanceTooSmall: return "DistanceTooSmall";
    case Verdict::kDistanceMismatch: return "DistanceMismatch";
  }
  return "Unknown";
}

Verdict check_solution(const Instance& inst, const Solution& sol) {
  EdgeMask mask = inst.graph.empty_mask();
  for (EdgeId e : sol.deleted_edges) {
    if (e < 0 || e >= inst.graph.edge_count()) return Verdict::kEdgeNotInGraph;
    mask[e] = 1;
  }
  const auto distinct = std::count(mask.begin(), mask.end(), std::uint8_t{1});
  if (distinct > inst.k) return Verdict::kBudgetExceeded;
  const Distance d = st_distance(inst.graph, inst.s, inst.t, &mask);
  if (!(d >= inst.ell)) return Verdict::kDistanceTooSmall;
  if (d != sol.achieved_distance) return Verdict::kDistanceMismatch;
  return Verdict::kPass;
}

}  // namespace mve
