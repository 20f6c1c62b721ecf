#pragma once

#include <cstdint>
#include <vector>

#include "mve/graph.hpp"

namespace mve {

struct StCut {
  std::int64_t size = 0;
  std::vector<EdgeId> edges;  // a minimum cut, sorted; empty if s,t disconnected
};

/// Minimum s-t edge cut with unit capacities (lengths ignored), computed
/// by augmenting along edge-disjoint paths. The returned edges are those
/// leaving the residual source side.
StCut min_st_cut(const Graph& g, Vertex s, Vertex t,
                 const EdgeMask* removed = nullptr);
std::int64_t min_st_cut_size(const Graph& g, Vertex s, Vertex t);

/// Complement of a spanning forest grown greedily in edge-id order.
std::vector<EdgeId> feedback_edge_set(const Graph& g);

struct TwinClass {
  std::vector<Vertex> members;                // sorted
  std::vector<Vertex> external_neighborhood;  // N(v) \ members, sorted
};

/// Partition of V \ excluded into classes of true or false twins
/// (singletons included), ordered by smallest member.
std::vector<TwinClass> twin_classes(const Graph& g,
                                    const std::vector<Vertex>& excluded);

/// True iff N(v) \ members is the same set for every member.
bool is_twin_class(const Graph& g, const std::vector<Vertex>& members);

struct ClusterDecomposition {
  std::vector<Vertex> deletion_set;          // X, sorted
  std::vector<std::vector<Vertex>> cliques;  // components of G - X
  [[nodiscard]] std::int32_t x() const {
    return static_cast<std::int32_t>(deletion_set.size());
  }
};

/// Minimum cluster vertex deletion set by 3-way branching on induced P3s.
ClusterDecomposition cluster_vertex_deletion_set(const Graph& g);

/// Builds the decomposition for a given X; throws InputError if G - X is
/// not a disjoint union of cliques.
ClusterDecomposition decompose_with(const Graph& g, std::vector<Vertex> deletion_set);

/// Checks the partition and clique structure of a decomposition.
bool is_valid_decomposition(const Graph& g, const ClusterDecomposition& d);

}  // namespace mve
