#include "mve/paths.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>
#include <utility>

#include "mve/errors.hpp"

namespace mve {
namespace {

struct DijkstraResult {
  std::vector<Distance> dist;
  std::vector<Vertex> parent;
};

// Runs Dijkstra; stops once `stop_at` settles (if >= 0).
DijkstraResult run_dijkstra(const Graph& g, Vertex source, const EdgeMask* removed,
                            Vertex stop_at) {
  if (!g.valid_vertex(source)) {
    throw InputError("invalid source vertex " + std::to_string(source));
  }
  const auto n = static_cast<std::size_t>(g.vertex_count());
  DijkstraResult r{std::vector<Distance>(n, Distance::infinite()),
                   std::vector<Vertex>(n, -1)};
  std::vector<std::uint8_t> settled(n, 0);
  using Item = std::pair<Distance::value_type, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  r.dist[source] = Distance(0);
  queue.emplace(0, source);
  while (!queue.empty()) {
    const auto [d, v] = queue.top();
    queue.pop();
    if (settled[v] != 0) continue;
    settled[v] = 1;
    if (v == stop_at) break;
    for (const Arc& a : g.neighbors(v)) {
      if (removed != nullptr && (*removed)[a.edge] != 0) continue;
      const Distance nd(d + g.edge(a.edge).length);
      if (nd < r.dist[a.to]) {
        r.dist[a.to] = nd;
        r.parent[a.to] = v;
        queue.emplace(nd.value(), a.to);
      } else if (nd == r.dist[a.to] && v < r.parent[a.to]) {
        r.parent[a.to] = v;
      }
    }
  }
  return r;
}

}  // namespace

std::vector<Distance> shortest_distances(const Graph& g, Vertex source,
                                         const EdgeMask* removed) {
  return run_dijkstra(g, source, removed, -1).dist;
}

Distance st_distance(const Graph& g, Vertex source, Vertex target,
                     const EdgeMask* removed) {
  if (!g.valid_vertex(target)) {
    throw InputError("invalid target vertex " + std::to_string(target));
  }
  return run_dijkstra(g, source, removed, target).dist[target];
}

std::optional<Path> shortest_path(const Graph& g, Vertex s, Vertex t,
                                  const EdgeMask* removed) {
  if (!g.valid_vertex(t)) {
    throw InputError("invalid target vertex " + std::to_string(t));
  }
  // Every vertex on the path settles before t, so its predecessor is final.
  const DijkstraResult r = run_dijkstra(g, s, removed, t);
  if (r.dist[t].is_infinite()) return std::nullopt;
  Path path;
  path.length = r.dist[t].value();
  for (Vertex v = t; v != s; v = r.parent[v]) path.vertices.push_back(v);
  path.vertices.push_back(s);
  std::reverse(path.vertices.begin(), path.vertices.end());
  for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i) {
    path.edges.push_back(*g.find_edge(path.vertices[i], path.vertices[i + 1]));
  }
  return path;
}

Distance diameter(const Graph& g) {
  Distance best(0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (Distance d : shortest_distances(g, v)) best = std::max(best, d);
  }
  return best;
}

}  // namespace mve
