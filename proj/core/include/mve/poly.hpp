#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mve/context.hpp"
#include "mve/instance.hpp"
#include "mve/sp_tree.hpp"

namespace mve {

/// cost[node][x]: fewest deletions inside the node's subgraph so that no
/// terminal-to-terminal path is shorter than x, for x = 0..ell.
struct MinCostTable {
  std::vector<std::vector<std::int64_t>> cost;
  std::vector<std::vector<std::int32_t>> split;  // serial argmin x'
};

/// best[node][j]: longest terminal distance reachable with at most j
/// deletions inside the node's subgraph, for j = 0..k.
struct MaxLengthTable {
  std::vector<std::vector<Distance>> best;
  std::vector<std::vector<std::int32_t>> split;  // argmax j1
};

MinCostTable fill_min_cost_table(const SpTree& tree, const Graph& g, Length ell);
MaxLengthTable fill_max_length_table(const SpTree& tree, const Graph& g,
                                     std::int64_t k);

struct SpMinCostResult {
  std::int64_t min_deletions = 0;
  Solution solution;
};

/// Min-Cost on a two-terminal series-parallel graph whose terminals are
/// the tree's root terminals.
SpMinCostResult sp_min_cost(const SpTree& tree, const Graph& g, Length ell);

struct SpMaxLengthResult {
  Distance distance;
  Solution solution;
};

/// Max-Length with at most k deletions on a two-terminal SP graph. No
/// check against the minimum cut is made; budgets reaching it yield
/// Infinite.
SpMaxLengthResult sp_max_length(const SpTree& tree, const Graph& g, std::int64_t k);

/// Unit lengths, diameter at most two. For ell >= 5 the answer is yes iff
/// k >= min(deg s, deg t); ell in {2,3,4} falls back to the search tree.
/// Throws PreconditionError outside the class.
std::optional<Solution> solve_diameter2(const Instance& inst,
                                        SolveContext* ctx = nullptr);

/// Unit-length complete graphs: ell = 1 needs nothing, ell = 2 needs one
/// deletion, larger ell needs n - 1. Throws PreconditionError outside the
/// class.
std::optional<Solution> solve_complete_unit(const Instance& inst);

}  // namespace mve
