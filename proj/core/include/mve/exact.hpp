#pragma once

#include <functional>
#include <optional>

#include "mve/context.hpp"
#include "mve/instance.hpp"
#include "mve/structure.hpp"

namespace mve {

/// Decision solver: a feasible solution with at most k deletions, or
/// nullopt when none exists.
using DecisionSolver =
    std::function<std::optional<Solution>(const Instance&, SolveContext&)>;

/// Answers that need no search: the empty set when dist(s,t) >= ell, a
/// minimum s-t cut when k reaches the cut size. nullopt otherwise.
std::optional<Solution> trivial_solution(const Instance& inst);

/// Exhaustive enumeration by cardinality, then lexicographically by the
/// sorted edge-id sequence. Returns the first feasible set.
std::optional<Solution> brute_force(const Instance& inst, SolveContext* ctx = nullptr);

/// Deletes every edge at s when k >= deg(s); otherwise brute force, which
/// then only enumerates sets smaller than the maximum degree.
std::optional<Solution> xp_by_max_degree(const Instance& inst,
                                         SolveContext* ctx = nullptr);

/// Depth-bounded search tree: while the deterministic shortest s-t path is
/// shorter than ell, branch on deleting each of its edges (in path order).
std::optional<Solution> search_tree(const Instance& inst, SolveContext* ctx = nullptr);

/// Smallest budget for which `solver` answers yes (the instance's own k is
/// ignored). Never exceeds the minimum s-t cut size.
Solution min_cost(const Instance& inst, const DecisionSolver& solver,
                  SolveContext* ctx = nullptr);

/// Largest achievable s-t distance with at most k deletions (the
/// instance's ell is ignored), found by raising the target past each
/// solution's distance until the solver answers no.
Solution max_length(const Instance& inst, const DecisionSolver& solver,
                    SolveContext* ctx = nullptr);

/// Makes all members of a twin class behave alike in `solution`, never
/// increasing its size nor decreasing the s-t distance. Unit lengths only.
Solution normalize_twins(const Graph& g, Vertex s, Vertex t,
                         const TwinClass& twin_class, const Solution& solution);

/// Exact solver for unit lengths parameterized by a cluster vertex
/// deletion set. Throws PreconditionError on non-unit lengths and
/// InputError when `decomposition` is not valid for the graph.
std::optional<Solution> cvd_fpt(const Instance& inst,
                                const ClusterDecomposition& decomposition,
                                SolveContext* ctx = nullptr);

/// Adapters binding the free functions to the DecisionSolver signature.
DecisionSolver brute_force_solver();
DecisionSolver search_tree_solver();
DecisionSolver xp_solver();
DecisionSolver cvd_solver(ClusterDecomposition decomposition);

}  // namespace mve
