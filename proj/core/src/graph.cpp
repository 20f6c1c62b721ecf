#include "mve/graph.hpp"

#include <algorithm>
#include <string>

#include "mve/errors.hpp"

namespace mve {

Graph::Graph(Vertex vertex_count) {
  if (vertex_count < 0) throw InputError("negative vertex count");
  adjacency_.resize(static_cast<std::size_t>(vertex_count));
}

EdgeId Graph::add_edge(Vertex u, Vertex v, Length length) {
  if (!valid_vertex(u) || !valid_vertex(v)) {
    throw InputError("edge endpoint out of range: {" + std::to_string(u) +
                     "," + std::to_string(v) + "}");
  }
  if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
  if (length < 1) throw InputError("edge length must be positive");
  if (adjacent(u, v)) {
    throw InputError("duplicate edge {" + std::to_string(u) + "," +
                     std::to_string(v) + "}");
  }
  if (u > v) std::swap(u, v);
  const auto id = static_cast<EdgeId>(edges_.size());
  edges_.push_back({u, v, length});
  auto insert_sorted = [](std::vector<Arc>& list, Arc arc) {
    auto pos = std::lower_bound(
        list.begin(), list.end(), arc,
        [](const Arc& a, const Arc& b) { return a.to < b.to; });
    list.insert(pos, arc);
  };
  insert_sorted(adjacency_[u], {v, id});
  insert_sorted(adjacency_[v], {u, id});
  return id;
}

std::optional<EdgeId> Graph::find_edge(Vertex u, Vertex v) const {
  if (!valid_vertex(u) || !valid_vertex(v)) return std::nullopt;
  const auto& list = adjacency_[u];
  auto pos = std::lower_bound(
      list.begin(), list.end(), v,
      [](const Arc& a, Vertex target) { return a.to < target; });
  if (pos != list.end() && pos->to == v) return pos->edge;
  return std::nullopt;
}

bool Graph::unit_lengths() const {
  return std::all_of(edges_.begin(), edges_.end(),
                     [](const Edge& e) { return e.length == 1; });
}

Length Graph::total_length() const {
  Length sum = 0;
  for (const auto& e : edges_) sum += e.length;
  return sum;
}

bool Graph::is_complete() const {
  const auto n = static_cast<std::int64_t>(vertex_count());
  return static_cast<std::int64_t>(edges_.size()) == n * (n - 1) / 2;
}

bool Graph::adjacency_consistent() const {
  Graph rebuilt(vertex_count());
  for (const auto& e : edges_) rebuilt.add_edge(e.u, e.v, e.length);
  for (Vertex v = 0; v < vertex_count(); ++v) {
    const auto a = neighbors(v);
    const auto b = rebuilt.neighbors(v);
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].to != b[i].to || a[i].edge != b[i].edge) return false;
    }
  }
  return true;
}

std::vector<std::int32_t> connected_components(const Graph& g,
                                               const EdgeMask* removed) {
  std::vector<std::int32_t> label(static_cast<std::size_t>(g.vertex_count()), -1);
  std::int32_t next = 0;
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < g.vertex_count(); ++root) {
    if (label[root] >= 0) continue;
    label[root] = next;
    stack.push_back(root);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (const Arc& a : g.neighbors(v)) {
        if (removed != nullptr && (*removed)[a.edge] != 0) continue;
        if (label[a.to] < 0) {
          label[a.to] = next;
          stack.push_back(a.to);
        }
      }
    }
    ++next;
  }
  return label;
}

}  // namespace mve
