#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace mve {

using Vertex = std::int32_t;
using EdgeId = std::int32_t;
using Length = std::int64_t;

struct Edge {
  Vertex u = 0;  // u < v
  Vertex v = 0;
  Length length = 1;

  [[nodiscard]] Vertex other(Vertex x) const { return x == u ? v : u; }
  bool operator==(const Edge&) const = default;
};

struct Arc {
  Vertex to = 0;
  EdgeId edge = 0;
};

/// Per-edge flag vector; nonzero marks an edge as removed.
using EdgeMask = std::vector<std::uint8_t>;

/// Simple undirected graph with positive integer edge lengths.
///
/// Vertices are 0..n-1. Edge ids are insertion positions. The adjacency
/// lists are kept sorted by neighbor id so that every traversal is
/// deterministic.
class Graph {
 public:
  Graph() = default;
  explicit Graph(Vertex vertex_count);

  /// Throws InputError on self-loops, duplicates, bad ids or length < 1.
  EdgeId add_edge(Vertex u, Vertex v, Length length = 1);

  [[nodiscard]] Vertex vertex_count() const {
    return static_cast<Vertex>(adjacency_.size());
  }
  [[nodiscard]] EdgeId edge_count() const {
    return static_cast<EdgeId>(edges_.size());
  }
  [[nodiscard]] const Edge& edge(EdgeId e) const { return edges_[e]; }
  [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
  [[nodiscard]] std::span<const Arc> neighbors(Vertex v) const {
    return adjacency_[v];
  }
  [[nodiscard]] std::int32_t degree(Vertex v) const {
    return static_cast<std::int32_t>(adjacency_[v].size());
  }
  [[nodiscard]] std::optional<EdgeId> find_edge(Vertex u, Vertex v) const;
  [[nodiscard]] bool adjacent(Vertex u, Vertex v) const {
    return find_edge(u, v).has_value();
  }
  [[nodiscard]] bool valid_vertex(Vertex v) const {
    return v >= 0 && v < vertex_count();
  }
  [[nodiscard]] bool unit_lengths() const;
  [[nodiscard]] Length total_length() const;
  [[nodiscard]] bool is_complete() const;
  [[nodiscard]] EdgeMask empty_mask() const {
    return EdgeMask(edges_.size(), 0);
  }

  /// Rebuilds the adjacency index from the edge list and compares.
  [[nodiscard]] bool adjacency_consistent() const;

  bool operator==(const Graph& other) const { return edges_ == other.edges_ && vertex_count() == other.vertex_count(); }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Arc>> adjacency_;
};

/// Connected component label per vertex (labels in order of first vertex).
std::vector<std::int32_t> connected_components(const Graph& g,
                                               const EdgeMask* removed = nullptr);

}  // namespace mve
