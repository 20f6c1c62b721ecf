#include "mve/poly.hpp"

#include <algorithm>

#include "mve/errors.hpp"
#include "mve/exact.hpp"
#include "mve/paths.hpp"

namespace mve {

MinCostTable fill_min_cost_table(const SpTree& tree, const Graph& g, Length ell) {
  if (ell < 1) throw InputError("ell must be positive");
  const auto width = static_cast<std::size_t>(ell) + 1;
  MinCostTable table;
  table.cost.assign(tree.size(), std::vector<std::int64_t>(width, 0));
  table.split.assign(tree.size(), std::vector<std::int32_t>(width, -1));
  for (std::int32_t id : tree.post_order()) {
    const auto& nd = tree.node(id);
    auto& row = table.cost[id];
    switch (nd.kind) {
      case SpTree::Kind::kLeaf: {
        const Length len = g.edge(nd.edge).length;
        for (std::size_t x = 0; x < width; ++x) {
          row[x] = len < static_cast<Length>(x) ? 1 : 0;
        }
        break;
      }
      case SpTree::Kind::kSerial: {
        const auto& l = table.cost[nd.left];
        const auto& r = table.cost[nd.right];
        for (std::size_t x = 0; x < width; ++x) {
          std::int64_t best = l[0] + r[x];
          std::int32_t arg = 0;
          for (std::size_t xp = 1; xp <= x; ++xp) {
            const auto cand = l[xp] + r[x - xp];
            if (cand < best) {
              best = cand;
              arg = static_cast<std::int32_t>(xp);
            }
          }
          row[x] = best;
          table.split[id][x] = arg;
        }
        break;
      }
      case SpTree::Kind::kParallel: {
        const auto& l = table.cost[nd.left];
        const auto& r = table.cost[nd.right];
        for (std::size_t x = 0; x < width; ++x) row[x] = l[x] + r[x];
        break;
      }
    }
  }
  return table;
}

SpMinCostResult sp_min_cost(const SpTree& tree, const Graph& g, Length ell) {
  const MinCostTable table = fill_min_cost_table(tree, g, ell);
  std::vector<EdgeId> witness;
  std::vector<std::pair<std::int32_t, std::size_t>> stack{
      {tree.root(), static_cast<std::size_t>(ell)}};
  while (!stack.empty()) {
    const auto [id, x] = stack.back();
    stack.pop_back();
    const auto& nd = tree.node(id);
    switch (nd.kind) {
      case SpTree::Kind::kLeaf:
        if (table.cost[id][x] == 1) witness.push_back(nd.edge);
        break;
      case SpTree::Kind::kSerial: {
        const auto xp = static_cast<std::size_t>(table.split[id][x]);
        stack.emplace_back(nd.left, xp);
        stack.emplace_back(nd.right, x - xp);
        break;
      }
      case SpTree::Kind::kParallel:
        stack.emplace_back(nd.left, x);
        stack.emplace_back(nd.right, x);
        break;
    }
  }
  const auto& root = tree.node(tree.root());
  SpMinCostResult out;
  out.min_deletions = table.cost[tree.root()][static_cast<std::size_t>(ell)];
  out.solution = make_solution(g, root.a, root.b, std::move(witness));
  return out;
}

MaxLengthTable fill_max_length_table(const SpTree& tree, const Graph& g,
                                     std::int64_t k) {
  if (k < 0) throw InputError("k must be non-negative");
  const auto width = static_cast<std::size_t>(k) + 1;
  MaxLengthTable table;
  table.best.assign(tree.size(), std::vector<Distance>(width, Distance(0)));
  table.split.assign(tree.size(), std::vector<std::int32_t>(width, -1));
  for (std::int32_t id : tree.post_order()) {
    const auto& nd = tree.node(id);
    auto& row = table.best[id];
    if (nd.kind == SpTree::Kind::kLeaf) {
      row[0] = Distance(g.edge(nd.edge).length);
      for (std::size_t j = 1; j < width; ++j) row[j] = Distance::infinite();
      continue;
    }
    const auto& l = table.best[nd.left];
    const auto& r = table.best[nd.right];
    const bool serial = nd.kind == SpTree::Kind::kSerial;
    for (std::size_t j = 0; j < width; ++j) {
      Distance best(0);
      std::int32_t arg = -1;
      for (std::size_t j1 = 0; j1 <= j; ++j1) {
        const Distance cand = serial ? l[j1] + r[j - j1] : std::min(l[j1], r[j - j1]);
        if (arg < 0 || cand > best) {
          best = cand;
          arg = static_cast<std::int32_t>(j1);
        }
      }
      row[j] = best;
      table.split[id][j] = arg;
    }
  }
  return table;
}

SpMaxLengthResult sp_max_length(const SpTree& tree, const Graph& g, std::int64_t k) {
  const MaxLengthTable table = fill_max_length_table(tree, g, k);
  std::vector<EdgeId> witness;
  std::vector<std::pair<std::int32_t, std::size_t>> stack{
      {tree.root(), static_cast<std::size_t>(k)}};
  while (!stack.empty()) {
    const auto [id, j] = stack.back();
    stack.pop_back();
    const auto& nd = tree.node(id);
    if (nd.kind == SpTree::Kind::kLeaf) {
      if (j >= 1) witness.push_back(nd.edge);
      continue;
    }
    const auto j1 = static_cast<std::size_t>(table.split[id][j]);
    stack.emplace_back(nd.left, j1);
    stack.emplace_back(nd.right, j - j1);
  }
  const auto& root = tree.node(tree.root());
  SpMaxLengthResult out;
  out.distance = table.best[tree.root()][static_cast<std::size_t>(k)];
  out.solution = make_solution(g, root.a, root.b, std::move(witness));
  return out;
}

std::optional<Solution> solve_diameter2(const Instance& inst, SolveContext* ctx) {
  if (!inst.unit_length()) {
    throw PreconditionError("solve_diameter2 requires unit edge lengths");
  }
  if (!(diameter(inst.graph) <= Distance(2))) {
    throw PreconditionError("solve_diameter2 requires diameter at most two");
  }
  if (inst.distance() >= inst.ell) return make_solution(inst, {});
  if (inst.ell >= 5) {
    const Vertex side =
        inst.graph.degree(inst.s) <= inst.graph.degree(inst.t) ? inst.s : inst.t;
    if (inst.k < inst.graph.degree(side)) return std::nullopt;
    std::vector<EdgeId> cut;
    for (const Arc& a : inst.graph.neighbors(side)) cut.push_back(a.edge);
    return make_solution(inst, std::move(cut));
  }
  return search_tree(inst, ctx);
}

std::optional<Solution> solve_complete_unit(const Instance& inst) {
  if (!inst.unit_length() || !inst.graph.is_complete()) {
    throw PreconditionError("solve_complete_unit requires a unit-length complete graph");
  }
  if (inst.ell <= 1) return make_solution(inst, {});
  const EdgeId st = *inst.graph.find_edge(inst.s, inst.t);
  if (inst.ell == 2) {
    if (inst.k < 1) return std::nullopt;
    return make_solution(inst, {st});
  }
  if (inst.k < inst.graph.vertex_count() - 1) return std::nullopt;
  std::vector<EdgeId> at_s;
  for (const Arc& a : inst.graph.neighbors(inst.s)) at_s.push_back(a.edge);
  return make_solution(inst, std::move(at_s));
}

}  // namespace mve
