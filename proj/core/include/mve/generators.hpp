#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mve/instance.hpp"

namespace mve {

/// Graph with every vertex assigned to one of three parts and no edge
/// inside a part.
struct TripartiteGraph {
  Graph graph;
  std::vector<std::uint8_t> part;  // 0, 1 or 2 per vertex

  /// Throws InputError on a bad part label or an edge inside a part.
  void validate() const;
};

/// Vertex-cover reduction producing a unit-length instance with k = h,
/// ell = 9. Vertex layout: the input vertices, the copies of part 2 in
/// order, s, t, then gadget vertices in construction order.
/// Throws InputError when h >= |V(g)| or the input is not tripartite.
Instance gen_vc_reduction(const TripartiteGraph& g, std::int64_t h);

struct GapInstance {
  Instance instance;  // ell set to the yes threshold
  Length yes_threshold = 0;  // 4x + 1
  Length no_threshold = 0;   // 3x + 2
};

/// Same layout with gadget lengths x (V1-V2 and V2'-V3), 3x (V1-V3) and 2x
/// (s-V2, V2'-t). Requires x >= 2.
GapInstance gen_gap_reduction(const TripartiteGraph& g, std::int64_t h, Length x);

/// Replaces every edge by a path of two edges; ell doubles, k unchanged.
/// Edge e becomes vertex n + e. Unit lengths only.
Instance gen_subdivision(const Instance& inst);

/// Split-graph reduction: the original vertices form a clique and each
/// original edge contributes `multiplicity` common neighbours of its
/// endpoints. k' = C(n,2) + k * M, ell' = 2 ell. M defaults to n^2 and must
/// exceed C(n,2).
Instance gen_split_reduction(const Instance& inst,
                             std::optional<std::int64_t> multiplicity = std::nullopt);

/// Completes the graph with edges of length ell + 1; missing edges are
/// appended in lexicographic order. Rejects isolated vertices.
Instance gen_complete_reduction(const Instance& inst);

enum class RandomFamily { kErdosRenyi, kSeriesParallel, kClusterPlusX, kTreePlusF };

std::optional<RandomFamily> parse_family(const std::string& name);
std::string to_string(RandomFamily family);

struct RandomParams {
  Vertex n = 10;             // vertices (not used by series-parallel)
  EdgeId m = 12;             // edges (series-parallel only)
  double p = 0.3;            // edge probability (erdos-renyi, cluster X links)
  std::int32_t x = 1;        // deletion-set size (cluster-plus-x)
  std::int32_t f = 2;        // extra edges (tree-plus-f-edges)
  Length max_length = 1;     // lengths uniform in [1, max_length]
  std::int64_t k = 1;
  Length ell = 3;
};

/// Deterministic in (family, params, seed). s and t always share a
/// component. Series-parallel instances use s = 0, t = 1 as terminals.
Instance gen_random(RandomFamily family, const RandomParams& params, std::uint64_t seed);

/// Checks used by the reduction postconditions.
bool is_bipartite(const Graph& g);
std::int32_t degeneracy(const Graph& g);

}  // namespace mve
