#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mve/distance.hpp"
#include "mve/graph.hpp"
#include "mve/instance.hpp"

// Slow, independent reference implementations used only by tests.
namespace oracle {

using mve::Distance;
using mve::EdgeMask;
using mve::Graph;
using mve::Length;
using mve::Vertex;

std::vector<Distance> bellman_ford(const Graph& g, Vertex source,
                                   const EdgeMask* removed = nullptr);

// Largest s-t distance reachable with at most c deletions, for every c up
// to `max_size`, obtained by evaluating every edge subset of that size.
// Queries beyond `max_size` are answered as if it were exhausted.
class SubsetTable {
 public:
  SubsetTable(const Graph& g, Vertex s, Vertex t, std::optional<int> max_size = std::nullopt);

  [[nodiscard]] bool decide(std::int64_t k, Length ell) const;
  [[nodiscard]] std::int64_t min_cost(Length ell) const;
  [[nodiscard]] Distance max_length(std::int64_t k) const;
  [[nodiscard]] std::int64_t min_cut() const;
  [[nodiscard]] Distance base_distance() const { return best_[0]; }

 private:
  std::vector<Distance> best_;  // prefix maxima by cardinality
};

inline bool decide(const mve::Instance& inst) {
  return SubsetTable(inst.graph, inst.s, inst.t).decide(inst.k, inst.ell);
}

// Connected unit-length graphs on n vertices, one per isomorphism class.
std::vector<Graph> connected_graphs(Vertex n);

std::int32_t min_vertex_cover(const Graph& g);

std::int32_t min_cluster_deletion(const Graph& g);
bool has_induced_p3(const Graph& g, const std::vector<bool>& removed);

bool has_k4_minor(const Graph& g);
// Two-terminal series-parallel test: G + {s,t} is 2-connected and has no
// K4 minor.
bool is_two_terminal_sp(const Graph& g, Vertex s, Vertex t);

}  // namespace oracle
