#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "mve/distance.hpp"
#include "mve/graph.hpp"

namespace mve {

/// An SP-MVE instance: delete at most `k` edges so that every s-t path
/// has length at least `ell`.
struct Instance {
  Graph graph;
  Vertex s = 0;
  Vertex t = 1;
  std::int64_t k = 0;
  Length ell = 1;

  Instance() = default;
  /// Throws InputError when s == t, ids are invalid, k < 0 or ell < 1.
  Instance(Graph g, Vertex s, Vertex t, std::int64_t k, Length ell);

  [[nodiscard]] bool unit_length() const { return graph.unit_lengths(); }
  /// Current s-t distance.
  [[nodiscard]] Distance distance() const;
  /// Required increase ell - dist(s,t); nullopt when s and t are already
  /// disconnected (trivially yes).
  [[nodiscard]] std::optional<Length> required_increase() const;

  [[nodiscard]] Instance with_budget(std::int64_t budget) const;
  [[nodiscard]] Instance with_target(Length target) const;

  bool operator==(const Instance&) const = default;
};

/// A set of deleted edges together with the s-t distance it leaves.
struct Solution {
  std::vector<EdgeId> deleted_edges;  // sorted, unique
  Distance achieved_distance;

  [[nodiscard]] std::int64_t cardinality() const {
    return static_cast<std::int64_t>(deleted_edges.size());
  }
  bool operator==(const Solution&) const = default;
};

/// Sorts/dedupes `edges` and evaluates the resulting distance.
Solution make_solution(const Graph& g, Vertex s, Vertex t,
                       std::vector<EdgeId> edges);
inline Solution make_solution(const Instance& inst, std::vector<EdgeId> edges) {
  return make_solution(inst.graph, inst.s, inst.t, std::move(edges));
}

EdgeMask to_mask(const Graph& g, const std::vector<EdgeId>& edges);

enum class Verdict {
  kPass,
  kEdgeNotInGraph,
  kBudgetExceeded,
  kDistanceTooSmall,
  kDistanceMismatch,
};

std::string_view to_string(Verdict v);

/// Independent feasibility check: S is a subset of E, |S| <= k, the
/// recomputed distance is at least ell and matches the recorded one.
Verdict check_solution(const Instance& inst, const Solution& sol);

}  // namespace mve
