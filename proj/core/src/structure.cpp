#include "mve/structure.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <numeric>
#include <optional>

#include "mve/errors.hpp"

namespace mve {

StCut min_st_cut(const Graph& g, Vertex s, Vertex t, const EdgeMask* removed) {
  if (!g.valid_vertex(s) || !g.valid_vertex(t) || s == t) {
    throw InputError("min_st_cut needs two distinct valid vertices");
  }
  // flow[e] = +1 means one unit from edge(e).u to edge(e).v.
  std::vector<std::int8_t> flow(static_cast<std::size_t>(g.edge_count()), 0);
  auto residual = [&](Vertex from, EdgeId e) {
    if (removed != nullptr && (*removed)[e] != 0) return 0;
    const int dir = from == g.edge(e).u ? 1 : -1;
    return 1 - dir * flow[e];
  };
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<EdgeId> via(n);
  std::vector<std::uint8_t> seen(n);
  auto search = [&]() {
    std::fill(seen.begin(), seen.end(), 0);
    std::deque<Vertex> queue{s};
    seen[s] = 1;
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (const Arc& a : g.neighbors(v)) {
        if (seen[a.to] != 0 || residual(v, a.edge) <= 0) continue;
        seen[a.to] = 1;
        via[a.to] = a.edge;
        if (a.to == t) return true;
        queue.push_back(a.to);
      }
    }
    return false;
  };

  StCut cut;
  while (search()) {
    for (Vertex v = t; v != s;) {
      const EdgeId e = via[v];
      const Vertex from = g.edge(e).other(v);
      flow[e] = static_cast<std::int8_t>(flow[e] + (from == g.edge(e).u ? 1 : -1));
      v = from;
    }
    ++cut.size;
  }
  // `seen` now marks the residual source side.
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (removed != nullptr && (*removed)[e] != 0) continue;
    if (seen[g.edge(e).u] != seen[g.edge(e).v]) cut.edges.push_back(e);
  }
  return cut;
}

std::int64_t min_st_cut_size(const Graph& g, Vertex s, Vertex t) {
  return min_st_cut(g, s, t).size;
}

std::vector<EdgeId> feedback_edge_set(const Graph& g) {
  std::vector<Vertex> parent(static_cast<std::size_t>(g.vertex_count()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::vector<EdgeId> feedback;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Vertex a = find(g.edge(e).u);
    const Vertex b = find(g.edge(e).v);
    if (a == b) {
      feedback.push_back(e);
    } else {
      parent[a] = b;
    }
  }
  return feedback;
}

namespace {

std::vector<Vertex> open_neighborhood(const Graph& g, Vertex v) {
  std::vector<Vertex> out;
  for (const Arc& a : g.neighbors(v)) out.push_back(a.to);
  return out;
}

std::vector<Vertex> closed_neighborhood(const Graph& g, Vertex v) {
  auto out = open_neighborhood(g, v);
  out.insert(std::upper_bound(out.begin(), out.end(), v), v);
  return out;
}

}  // namespace

bool is_twin_class(const Graph& g, const std::vector<Vertex>& members) {
  if (members.empty()) return true;
  auto outside = [&](Vertex v) {
    std::vector<Vertex> out;
    for (Vertex w : open_neighborhood(g, v)) {
      if (std::find(members.begin(), members.end(), w) == members.end()) {
        out.push_back(w);
      }
    }
    return out;
  };
  const auto reference = outside(members.front());
  return std::all_of(members.begin(), members.end(),
                     [&](Vertex v) { return outside(v) == reference; });
}

std::vector<TwinClass> twin_classes(const Graph& g,
                                    const std::vector<Vertex>& excluded) {
  const auto n = g.vertex_count();
  std::vector<std::uint8_t> skip(static_cast<std::size_t>(n), 0);
  for (Vertex v : excluded) {
    if (g.valid_vertex(v)) skip[v] = 1;
  }
  std::map<std::vector<Vertex>, std::vector<Vertex>> by_open;
  std::map<std::vector<Vertex>, std::vector<Vertex>> by_closed;
  for (Vertex v = 0; v < n; ++v) {
    if (skip[v] != 0) continue;
    by_open[open_neighborhood(g, v)].push_back(v);
    by_closed[closed_neighborhood(g, v)].push_back(v);
  }
  // A vertex cannot have both a true twin and a false twin, so picking
  // whichever grouping is non-trivial yields a partition.
  std::vector<std::int32_t> assigned(static_cast<std::size_t>(n), -1);
  std::vector<TwinClass> classes;
  for (Vertex v = 0; v < n; ++v) {
    if (skip[v] != 0 || assigned[v] >= 0) continue;
    const auto& open_group = by_open[open_neighborhood(g, v)];
    const auto& closed_group = by_closed[closed_neighborhood(g, v)];
    const auto& group = open_group.size() > 1 ? open_group : closed_group;
    TwinClass cls;
    cls.members = group;
    for (Vertex m : cls.members) assigned[m] = static_cast<std::int32_t>(classes.size());
    for (Vertex w : open_neighborhood(g, v)) {
      if (!std::binary_search(cls.members.begin(), cls.members.end(), w)) {
        cls.external_neighborhood.push_back(w);
      }
    }
    classes.push_back(std::move(cls));
  }
  return classes;
}

namespace {

// First induced P3 (a, center, b) in G - X, scanning centers by id.
std::optional<std::array<Vertex, 3>> find_induced_p3(
    const Graph& g, const std::vector<std::uint8_t>& deleted) {
  for (Vertex c = 0; c < g.vertex_count(); ++c) {
    if (deleted[c] != 0) continue;
    const auto nb = g.neighbors(c);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (deleted[nb[i].to] != 0) continue;
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (deleted[nb[j].to] != 0) continue;
        if (!g.adjacent(nb[i].to, nb[j].to)) {
          return std::array<Vertex, 3>{nb[i].to, c, nb[j].to};
        }
      }
    }
  }
  return std::nullopt;
}

bool branch_cvd(const Graph& g, std::vector<std::uint8_t>& deleted, int budget) {
  const auto p3 = find_induced_p3(g, deleted);
  if (!p3) return true;
  if (budget == 0) return false;
  for (Vertex v : *p3) {
    deleted[v] = 1;
    if (branch_cvd(g, deleted, budget - 1)) return true;
    deleted[v] = 0;
  }
  return false;
}

}  // namespace

ClusterDecomposition decompose_with(const Graph& g, std::vector<Vertex> deletion_set) {
  std::sort(deletion_set.begin(), deletion_set.end());
  deletion_set.erase(std::unique(deletion_set.begin(), deletion_set.end()),
                     deletion_set.end());
  std::vector<std::uint8_t> in_x(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex v : deletion_set) {
    if (!g.valid_vertex(v)) throw InputError("deletion set vertex out of range");
    in_x[v] = 1;
  }
  ClusterDecomposition d;
  d.deletion_set = std::move(deletion_set);
  std::vector<std::int32_t> label(static_cast<std::size_t>(g.vertex_count()), -1);
  for (Vertex root = 0; root < g.vertex_count(); ++root) {
    if (in_x[root] != 0 || label[root] >= 0) continue;
    std::vector<Vertex> members{root};
    label[root] = static_cast<std::int32_t>(d.cliques.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (const Arc& a : g.neighbors(members[i])) {
        if (in_x[a.to] == 0 && label[a.to] < 0) {
          label[a.to] = label[root];
          members.push_back(a.to);
        }
      }
    }
    std::sort(members.begin(), members.end());
    d.cliques.push_back(std::move(members));
  }
  if (!is_valid_decomposition(g, d)) {
    throw InputError("G - X is not a cluster graph");
  }
  return d;
}

bool is_valid_decomposition(const Graph& g, const ClusterDecomposition& d) {
  std::vector<std::int32_t> owner(static_cast<std::size_t>(g.vertex_count()), -2);
  for (Vertex v : d.deletion_set) {
    if (!g.valid_vertex(v) || owner[v] != -2) return false;
    owner[v] = -1;
  }
  for (std::size_t c = 0; c < d.cliques.size(); ++c) {
    for (Vertex v : d.cliques[c]) {
      if (!g.valid_vertex(v) || owner[v] != -2) return false;
      owner[v] = static_cast<std::int32_t>(c);
    }
  }
  if (std::count(owner.begin(), owner.end(), -2) != 0) return false;
  for (const auto& clique : d.cliques) {
    for (std::size_t i = 0; i < clique.size(); ++i) {
      for (std::size_t j = i + 1; j < clique.size(); ++j) {
        if (!g.adjacent(clique[i], clique[j])) return false;
      }
    }
  }
  for (const Edge& e : g.edges()) {
    if (owner[e.u] >= 0 && owner[e.v] >= 0 && owner[e.u] != owner[e.v]) return false;
  }
  return true;
}

ClusterDecomposition cluster_vertex_deletion_set(const Graph& g) {
  std::vector<std::uint8_t> deleted(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int budget = 0;; ++budget) {
    std::fill(deleted.begin(), deleted.end(), 0);
    if (branch_cvd(g, deleted, budget)) break;
  }
  std::vector<Vertex> x;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (deleted[v] != 0) x.push_back(v);
  }
  return decompose_with(g, std::move(x));
}

}  // namespace mve
