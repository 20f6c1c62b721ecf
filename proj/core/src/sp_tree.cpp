#include "mve/sp_tree.hpp"

#include <algorithm>
#include <list>
#include <map>
#include <set>

namespace mve {

std::int32_t SpTree::add_leaf(EdgeId edge, Vertex a, Vertex b) {
  nodes_.push_back({Kind::kLeaf, a, b, -1, edge, -1, -1});
  return static_cast<std::int32_t>(nodes_.size() - 1);
}

std::int32_t SpTree::add_serial(std::int32_t left, std::int32_t right, Vertex a,
                                Vertex middle, Vertex b) {
  nodes_.push_back({Kind::kSerial, a, b, middle, -1, left, right});
  return static_cast<std::int32_t>(nodes_.size() - 1);
}

std::int32_t SpTree::add_parallel(std::int32_t left, std::int32_t right,
                                  Vertex a, Vertex b) {
  nodes_.push_back({Kind::kParallel, a, b, -1, -1, left, right});
  return static_cast<std::int32_t>(nodes_.size() - 1);
}

void SpTree::orient_root(Vertex a) {
  Node& nd = nodes_[root_];
  if (nd.a == a) return;
  std::swap(nd.a, nd.b);
  if (nd.kind == Kind::kSerial) std::swap(nd.left, nd.right);
}

std::vector<std::int32_t> SpTree::post_order() const {
  std::vector<std::int32_t> order;
  if (root_ < 0) return order;
  std::vector<std::pair<std::int32_t, bool>> stack{{root_, false}};
  while (!stack.empty()) {
    auto [id, expanded] = stack.back();
    stack.pop_back();
    const Node& nd = nodes_[id];
    if (expanded || nd.kind == Kind::kLeaf) {
      order.push_back(id);
      continue;
    }
    stack.emplace_back(id, true);
    stack.emplace_back(nd.right, false);
    stack.emplace_back(nd.left, false);
  }
  return order;
}

namespace {

// Multigraph edge during reduction; `node` is the subtree it stands for,
// oriented from `a` to `b`.
struct MultiEdge {
  Vertex a;
  Vertex b;
  std::int32_t node;
  bool alive = true;
};

}  // namespace

std::optional<SpTree> build_sp_tree(const Graph& g, Vertex s, Vertex t) {
  if (!g.valid_vertex(s) || !g.valid_vertex(t) || s == t) return std::nullopt;
  if (g.edge_count() == 0) return std::nullopt;

  SpTree tree;
  std::vector<MultiEdge> edges;
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<std::set<std::int32_t>> incident(n);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    const auto leaf = tree.add_leaf(e, ed.u, ed.v);
    edges.push_back({ed.u, ed.v, leaf});
    incident[ed.u].insert(e);
    incident[ed.v].insert(e);
  }
  std::int32_t alive_edges = g.edge_count();

  auto add_edge = [&](Vertex a, Vertex b, std::int32_t node) {
    const auto id = static_cast<std::int32_t>(edges.size());
    edges.push_back({a, b, node});
    incident[a].insert(id);
    incident[b].insert(id);
    ++alive_edges;
    return id;
  };
  auto kill = [&](std::int32_t id) {
    edges[id].alive = false;
    incident[edges[id].a].erase(id);
    incident[edges[id].b].erase(id);
    --alive_edges;
  };
  // Subtree node oriented as (from, to).
  auto oriented = [&](std::int32_t id, Vertex from) {
    const MultiEdge& me = edges[id];
    return me.a == from ? std::pair{me.node, me.b} : std::pair{me.node, me.a};
  };

  bool progress = true;
  while (progress) {
    progress = false;
    // Parallel reductions: merge every bundle of edges with equal endpoints.
    for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) {
      std::map<Vertex, std::int32_t> first_by_other;
      const std::vector<std::int32_t> snapshot(incident[v].begin(), incident[v].end());
      for (std::int32_t id : snapshot) {
        if (!edges[id].alive) continue;
        const Vertex other = edges[id].a == v ? edges[id].b : edges[id].a;
        if (other < v) continue;  // handled from the smaller endpoint
        auto [it, inserted] = first_by_other.try_emplace(other, id);
        if (inserted) continue;
        const std::int32_t keep = it->second;
        const auto left = oriented(keep, v).first;
        const auto right = oriented(id, v).first;
        const auto merged = tree.add_parallel(left, right, v, other);
        kill(keep);
        kill(id);
        it->second = add_edge(v, other, merged);
        progress = true;
      }
    }
    // Serial reductions: contract degree-2 non-terminals.
    for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) {
      if (v == s || v == t || incident[v].size() != 2) continue;
      const std::int32_t e1 = *incident[v].begin();
      const std::int32_t e2 = *std::next(incident[v].begin());
      const auto [left_node, a] = oriented(e1, v);
      const auto [right_node, b] = oriented(e2, v);
      if (a == b) continue;  // becomes a bundle; the parallel pass merges it
      const auto joined = tree.add_serial(left_node, right_node, a, v, b);
      kill(e1);
      kill(e2);
      add_edge(a, b, joined);
      progress = true;
    }
  }

  if (alive_edges != 1) return std::nullopt;
  for (std::size_t id = 0; id < edges.size(); ++id) {
    if (!edges[id].alive) continue;
    const MultiEdge& last = edges[id];
    if (!((last.a == s && last.b == t) || (last.a == t && last.b == s))) {
      return std::nullopt;
    }
    tree.set_root(last.node);
    tree.orient_root(s);
  }
  // Vertices never reached by any edge are not part of a connected SP graph.
  for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) {
    if (g.degree(v) == 0) return std::nullopt;
  }
  return tree;
}

bool is_valid_sp_tree(const SpTree& tree, const Graph& g, Vertex s, Vertex t) {
  if (tree.root() < 0) return false;
  const auto& root = tree.node(tree.root());
  if (!(root.a == s && root.b == t)) return false;
  std::vector<int> leaf_count(static_cast<std::size_t>(g.edge_count()), 0);
  auto same_pair = [](Vertex a, Vertex b, Vertex c, Vertex d) {
    return (a == c && b == d) || (a == d && b == c);
  };
  for (std::int32_t id : tree.post_order()) {
    const auto& nd = tree.node(id);
    switch (nd.kind) {
      case SpTree::Kind::kLeaf: {
        if (nd.edge < 0 || nd.edge >= g.edge_count()) return false;
        const Edge& e = g.edge(nd.edge);
        if (!same_pair(nd.a, nd.b, e.u, e.v)) return false;
        ++leaf_count[nd.edge];
        break;
      }
      case SpTree::Kind::kSerial: {
        const auto& l = tree.node(nd.left);
        const auto& r = tree.node(nd.right);
        if (!same_pair(l.a, l.b, nd.a, nd.middle)) return false;
        if (!same_pair(r.a, r.b, nd.middle, nd.b)) return false;
        if (nd.middle == nd.a || nd.middle == nd.b) return false;
        break;
      }
      case SpTree::Kind::kParallel: {
        const auto& l = tree.node(nd.left);
        const auto& r = tree.node(nd.right);
        if (!same_pair(l.a, l.b, nd.a, nd.b)) return false;
        if (!same_pair(r.a, r.b, nd.a, nd.b)) return false;
        break;
      }
    }
  }
  return std::all_of(leaf_count.begin(), leaf_count.end(),
                     [](int c) { return c == 1; });
}

}  // namespace mve
