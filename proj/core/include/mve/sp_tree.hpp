#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mve/graph.hpp"

namespace mve {

/// Binary decomposition tree of a two-terminal series-parallel graph.
///
/// Leaves carry an edge; inner nodes are serial (children share `middle`)
/// or parallel (children share both terminals). Terminal pairs are
/// unordered except at the root, which is stored as (s, t). A serial
/// node's left child spans {a, middle} and its right child {middle, b}.
class SpTree {
 public:
  enum class Kind : std::uint8_t { kLeaf, kSerial, kParallel };

  struct Node {
    Kind kind = Kind::kLeaf;
    Vertex a = 0;
    Vertex b = 0;
    Vertex middle = -1;   // serial only
    EdgeId edge = -1;     // leaf only
    std::int32_t left = -1;
    std::int32_t right = -1;
  };

  [[nodiscard]] const std::vector<Node>& nodes() const { return nodes_; }
  [[nodiscard]] const Node& node(std::int32_t id) const { return nodes_[id]; }
  [[nodiscard]] std::int32_t root() const { return root_; }
  [[nodiscard]] std::size_t size() const { return nodes_.size(); }

  /// Node ids in post-order (children before parents).
  [[nodiscard]] std::vector<std::int32_t> post_order() const;

  std::int32_t add_leaf(EdgeId edge, Vertex a, Vertex b);
  std::int32_t add_serial(std::int32_t left, std::int32_t right, Vertex a,
                          Vertex middle, Vertex b);
  std::int32_t add_parallel(std::int32_t left, std::int32_t right, Vertex a,
                            Vertex b);
  void set_root(std::int32_t id) { root_ = id; }
  /// Stores the root terminals as (a, other).
  void orient_root(Vertex a);

 private:
  std::vector<Node> nodes_;
  std::int32_t root_ = -1;
};

/// Recognizes G as two-terminal series-parallel with terminals (s, t) by
/// series/parallel reductions on an internal multigraph. Returns nullopt
/// when the reduction stalls.
std::optional<SpTree> build_sp_tree(const Graph& g, Vertex s, Vertex t);

/// Checks the structural invariants of `tree` against `g`: leaves biject
/// with edges, leaf terminals are the edge endpoints, serial and parallel
/// terminal sharing holds, and the root terminals are (s, t).
bool is_valid_sp_tree(const SpTree& tree, const Graph& g, Vertex s, Vertex t);

}  // namespace mve
