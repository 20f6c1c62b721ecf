#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "mve/instance.hpp"

namespace mve {

/// Rule 1: a degree-one vertex other than s, t was removed.
struct DeleteDegreeOne {
  Vertex vertex = 0;  // original id
  bool operator==(const DeleteDegreeOne&) const = default;
};

/// Rule 2: degree-two vertex `vertex` with non-adjacent neighbors u, w was
/// replaced by an edge {u, w}. `constituents` lists the original edges of
/// the new edge in path order from u to w.
struct ContractDegreeTwo {
  Vertex vertex = 0;
  Vertex u = 0;
  Vertex w = 0;
  Length length = 0;
  std::vector<EdgeId> constituents;
  bool operator==(const ContractDegreeTwo&) const = default;
};

/// Vertices discarded because they lie outside the component(s) of s and t.
struct DiscardComponent {
  std::vector<Vertex> vertices;
  bool operator==(const DiscardComponent&) const = default;
};

using ReductionEvent = std::variant<DeleteDegreeOne, ContractDegreeTwo, DiscardComponent>;

/// Ordered record of reductions, plus the map from kernel ids back to the
/// original graph.
struct KernelTrace {
  std::vector<ReductionEvent> events;
  /// kernel vertex id -> original vertex id
  std::vector<Vertex> vertex_origin;
  /// kernel edge id -> original edges whose lengths sum to its length
  std::vector<std::vector<EdgeId>> edge_origin;
};

struct KernelResult {
  Instance instance;
  KernelTrace trace;
};

struct RuleDelta {
  std::vector<ReductionEvent> events;
  [[nodiscard]] bool empty() const { return events.empty(); }
};

/// One exhaustive pass of Rule 1 (cascading), vertices in ascending id.
/// The returned instance keeps original vertex ids and removes no vertex
/// ids; deleted vertices simply become isolated.
std::pair<Instance, RuleDelta> apply_rule1(const Instance& inst);

/// One exhaustive pass of Rule 2, vertices in ascending id. Contracted
/// vertices become isolated; new edges are appended.
std::pair<Instance, RuleDelta> apply_rule2(const Instance& inst);

/// Rules 1 and 2 to a joint fixpoint on the s-t component(s), followed by
/// compaction to dense ids.
KernelResult kernelize(const Instance& inst);

/// Replays `trace` on the original graph and returns the kernel graph it
/// describes; used to check that a trace is self-consistent.
Graph replay_trace(const Instance& original, const KernelTrace& trace);

/// Maps a kernel solution back to the original graph: a contracted edge is
/// replaced by its first constituent. Throws ContractViolation on unknown
/// kernel edges.
Solution lift_solution(const Instance& original, const KernelTrace& trace,
                       const Solution& kernel_solution);

/// Size guarantee of the feedback-edge-set kernel.
struct KernelBound {
  std::int64_t feedback_edges = 0;
  std::int64_t max_vertices = 0;  // 5f + 2
  std::int64_t max_edges = 0;     // 6f + 2
};
KernelBound kernel_bound(const Graph& g);

}  // namespace mve
