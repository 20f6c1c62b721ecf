#pragma once

#include <optional>
#include <vector>

#include "mve/distance.hpp"
#include "mve/graph.hpp"

namespace mve {

struct Path {
  std::vector<Vertex> vertices;  // s ... t
  std::vector<EdgeId> edges;     // edges[i] joins vertices[i], vertices[i+1]
  Length length = 0;
};

/// Dijkstra from `source`; unreachable vertices map to Infinite.
/// Edges flagged in `removed` are ignored.
std::vector<Distance> shortest_distances(const Graph& g, Vertex source,
                                         const EdgeMask* removed = nullptr);

/// Distance between two vertices (stops as soon as `target` settles).
Distance st_distance(const Graph& g, Vertex source, Vertex target,
                     const EdgeMask* removed = nullptr);

/// One shortest path, chosen deterministically: every vertex keeps the
/// smallest-id predecessor among all tight ones.
std::optional<Path> shortest_path(const Graph& g, Vertex s, Vertex t,
                                  const EdgeMask* removed = nullptr);

/// Largest pairwise distance; Infinite if the graph is disconnected.
Distance diameter(const Graph& g);

}  // namespace mve
