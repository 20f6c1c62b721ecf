#include "mve/generators.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>

#include "mve/errors.hpp"

namespace mve {

void TripartiteGraph::validate() const {
  if (part.size() != static_cast<std::size_t>(graph.vertex_count())) {
    throw InputError("tripartite graph: one part label per vertex required");
  }
  for (auto p : part) {
    if (p > 2) throw InputError("tripartite graph: part label must be 0, 1 or 2");
  }
  for (const Edge& e : graph.edges()) {
    if (part[e.u] == part[e.v]) {
      throw InputError("tripartite graph: edge inside a part");
    }
  }
}

namespace {

struct GadgetLengths {
  Length v1_v2;
  Length v2_v3;
  Length v1_v3;
  Length s_v2;
  Length v2_t;
};

// Graph under construction with on-demand vertex creation.
class Builder {
 public:
  explicit Builder(Vertex initial) : count_(initial) {}

  Vertex add_vertex() { return count_++; }
  void add_edge(Vertex u, Vertex v) { edges_.emplace_back(u, v); }

  // `copies` vertex-disjoint paths from u to v, each of total length alpha.
  void add_gadget(Vertex u, Vertex v, Length alpha, Vertex copies) {
    for (Vertex c = 0; c < copies; ++c) {
      Vertex prev = u;
      for (Length i = 0; i + 1 < alpha; ++i) {
        const Vertex w = add_vertex();
        add_edge(prev, w);
        prev = w;
      }
      add_edge(prev, v);
    }
  }

  Graph build() const {
    Graph g(count_);
    for (const auto& [u, v] : edges_) g.add_edge(u, v, 1);
    return g;
  }

 private:
  Vertex count_;
  std::vector<std::pair<Vertex, Vertex>> edges_;
};

Instance layout_reduction(const TripartiteGraph& tg, std::int64_t h, Length ell,
                          const GadgetLengths& len) {
  tg.validate();
  const Vertex n = tg.graph.vertex_count();
  if (h < 0) throw InputError("h must be non-negative");
  if (h >= n) throw InputError("h must be smaller than the number of vertices");
  std::vector<Vertex> copy(static_cast<std::size_t>(n), -1);
  Vertex next = n;
  for (Vertex v = 0; v < n; ++v) {
    if (tg.part[v] == 1) copy[v] = next++;
  }
  const Vertex s = next++;
  const Vertex t = next++;
  Builder b(next);
  for (Vertex v = 0; v < n; ++v) {
    if (tg.part[v] == 1) b.add_edge(v, copy[v]);
  }
  for (Vertex v = 0; v < n; ++v) {
    if (tg.part[v] == 0) b.add_edge(s, v);
  }
  for (Vertex v = 0; v < n; ++v) {
    if (tg.part[v] == 2) b.add_edge(v, t);
  }
  for (const Edge& e : tg.graph.edges()) {
    Vertex a = e.u;
    Vertex c = e.v;
    if (tg.part[a] > tg.part[c]) std::swap(a, c);
    if (tg.part[a] == 0 && tg.part[c] == 1) {
      b.add_gadget(a, c, len.v1_v2, n);
    } else if (tg.part[a] == 1 && tg.part[c] == 2) {
      b.add_gadget(copy[a], c, len.v2_v3, n);
    } else {
      b.add_gadget(a, c, len.v1_v3, n);
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (tg.part[v] == 1) b.add_gadget(s, v, len.s_v2, n);
  }
  for (Vertex v = 0; v < n; ++v) {
    if (tg.part[v] == 1) b.add_gadget(copy[v], t, len.v2_t, n);
  }
  return Instance(b.build(), s, t, h, ell);
}

}  // namespace

Instance gen_vc_reduction(const TripartiteGraph& g, std::int64_t h) {
  return layout_reduction(g, h, 9, GadgetLengths{2, 2, 5, 4, 4});
}

GapInstance gen_gap_reduction(const TripartiteGraph& g, std::int64_t h, Length x) {
  if (x < 2) throw InputError("gap reduction requires x >= 2");
  GapInstance out;
  out.yes_threshold = 4 * x + 1;
  out.no_threshold = 3 * x + 2;
  out.instance = layout_reduction(g, h, out.yes_threshold,
                                  GadgetLengths{x, x, 3 * x, 2 * x, 2 * x});
  return out;
}

Instance gen_subdivision(const Instance& inst) {
  if (!inst.unit_length()) throw InputError("subdivision requires unit edge lengths");
  const Vertex n = inst.graph.vertex_count();
  Graph g(n + inst.graph.edge_count());
  for (EdgeId e = 0; e < inst.graph.edge_count(); ++e) {
    const Edge& ed = inst.graph.edge(e);
    g.add_edge(ed.u, n + e, 1);
    g.add_edge(n + e, ed.v, 1);
  }
  return Instance(std::move(g), inst.s, inst.t, inst.k, 2 * inst.ell);
}

Instance gen_split_reduction(const Instance& inst, std::optional<std::int64_t> multiplicity) {
  if (!inst.unit_length()) throw InputError("split reduction requires unit edge lengths");
  const std::int64_t n = inst.graph.vertex_count();
  const std::int64_t pairs = n * (n - 1) / 2;
  const std::int64_t copies = multiplicity.value_or(n * n);
  // The counting argument needs C(n,2) + k*M < (k+1)*M.
  if (copies <= pairs) {
    throw InputError("split reduction multiplicity must exceed C(n,2)");
  }
  const std::int64_t m = inst.graph.edge_count();
  Graph g(static_cast<Vertex>(n + m * copies));
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v, 1);
  }
  for (EdgeId e = 0; e < m; ++e) {
    const Edge& ed = inst.graph.edge(e);
    for (std::int64_t j = 0; j < copies; ++j) {
      const auto w = static_cast<Vertex>(n + e * copies + j);
      g.add_edge(ed.u, w, 1);
      g.add_edge(ed.v, w, 1);
    }
  }
  return Instance(std::move(g), inst.s, inst.t, pairs + inst.k * copies, 2 * inst.ell);
}

Instance gen_complete_reduction(const Instance& inst) {
  const Graph& src = inst.graph;
  for (Vertex v = 0; v < src.vertex_count(); ++v) {
    if (src.degree(v) == 0) {
      throw InputError("complete reduction requires a graph without isolated vertices");
    }
  }
  Graph g(src.vertex_count());
  for (const Edge& e : src.edges()) g.add_edge(e.u, e.v, e.length);
  for (Vertex u = 0; u < src.vertex_count(); ++u) {
    for (Vertex v = u + 1; v < src.vertex_count(); ++v) {
      if (!src.adjacent(u, v)) g.add_edge(u, v, inst.ell + 1);
    }
  }
  return Instance(std::move(g), inst.s, inst.t, inst.k, inst.ell);
}

std::optional<RandomFamily> parse_family(const std::string& name) {
  if (name == "erdos-renyi") return RandomFamily::kErdosRenyi;
  if (name == "series-parallel") return RandomFamily::kSeriesParallel;
  if (name == "cluster-plus-x") return RandomFamily::kClusterPlusX;
  if (name == "tree-plus-f-edges") return RandomFamily::kTreePlusF;
  return std::nullopt;
}

std::string to_string(RandomFamily family) {
  switch (family) {
    case RandomFamily::kErdosRenyi: return "erdos-renyi";
    case RandomFamily::kSeriesParallel: return "series-parallel";
    case RandomFamily::kClusterPlusX: return "cluster-plus-x";
    case RandomFamily::kTreePlusF: return "tree-plus-f-edges";
  }
  return "unknown";
}

namespace {

// std::mt19937_64 output is fully specified; the distributions are not,
// so bounded draws are done here to keep instances identical everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t r = engine_();
    while (r >= limit) r = engine_();
    return r % bound;
  }
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  bool coin(double p) {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p;
  }

 private:
  std::mt19937_64 engine_;
};

struct EdgeList {
  Vertex n = 0;
  std::vector<Edge> edges;
  std::set<std::pair<Vertex, Vertex>> present;

  bool add(Vertex u, Vertex v, Length len) {
    if (u == v) return false;
    if (u > v) std::swap(u, v);
    if (!present.emplace(u, v).second) return false;
    edges.push_back({u, v, len});
    return true;
  }
  Graph build() const {
    Graph g(n);
    for (const Edge& e : edges) g.add_edge(e.u, e.v, e.length);
    return g;
  }
};

// Joins every component to the one holding `hubs.front()`, through hubs inside it.
void connect_through(EdgeList& list, Rng& rng, const std::vector<Vertex>& hubs,
                     Length max_length) {
  Graph g = list.build();
  const auto label = connected_components(g);
  std::vector<Vertex> first(static_cast<std::size_t>(list.n), -1);
  for (Vertex v = 0; v < list.n; ++v) {
    if (first[label[v]] < 0) first[label[v]] = v;
  }
  const std::int32_t root = label[hubs.front()];
  std::vector<Vertex> anchors;
  for (Vertex h : hubs) {
    if (label[h] == root) anchors.push_back(h);
  }
  for (Vertex v = 0; v < list.n; ++v) {
    const auto c = label[v];
    if (first[c] != v || c == root) continue;
    const Vertex hub = anchors[rng.below(anchors.size())];
    list.add(hub, v, rng.between(1, max_length));
  }
}

std::pair<Vertex, Vertex> pick_terminals(const Graph& g, Rng& rng) {
  const auto label = connected_components(g);
  std::vector<std::int32_t> size(static_cast<std::size_t>(g.vertex_count()), 0);
  for (auto l : label) ++size[l];
  std::vector<Vertex> candidates;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (size[label[v]] >= 2) candidates.push_back(v);
  }
  if (candidates.empty()) throw InputError("no component with two vertices");
  const Vertex s = candidates[rng.below(candidates.size())];
  std::vector<Vertex> partners;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (v != s && label[v] == label[s]) partners.push_back(v);
  }
  return {s, partners[rng.below(partners.size())]};
}

}  // namespace

Instance gen_random(RandomFamily family, const RandomParams& params, std::uint64_t seed) {
  if (params.max_length < 1) throw InputError("max_length must be positive");
  if (params.p < 0 || params.p > 1) throw InputError("p must lie in [0, 1]");
  Rng rng(seed);
  EdgeList list;
  auto length = [&] { return rng.between(1, params.max_length); };

  switch (family) {
    case RandomFamily::kErdosRenyi: {
      if (params.n < 2) throw InputError("erdos-renyi needs n >= 2");
      list.n = params.n;
      for (Vertex u = 0; u < params.n; ++u) {
        for (Vertex v = u + 1; v < params.n; ++v) {
          if (rng.coin(params.p)) list.add(u, v, length());
        }
      }
      std::vector<Vertex> all(static_cast<std::size_t>(params.n));
      for (Vertex v = 0; v < params.n; ++v) all[v] = v;
      connect_through(list, rng, all, params.max_length);
      break;
    }
    case RandomFamily::kSeriesParallel: {
      if (params.m < 1) throw InputError("series-parallel needs m >= 1");
      list.n = 2;
      list.add(0, 1, length());
      while (static_cast<EdgeId>(list.edges.size()) < params.m) {
        const auto pick = rng.below(list.edges.size());
        const Edge e = list.edges[pick];
        const Vertex w = list.n++;
        const bool serial =
            static_cast<EdgeId>(list.edges.size()) + 1 == params.m || rng.coin(0.5);
        if (serial) {
          list.present.erase({e.u, e.v});
          list.edges[pick] = {e.u, w, length()};
          list.present.emplace(e.u, w);
          list.add(w, e.v, length());
        } else {
          list.add(e.u, w, length());
          list.add(w, e.v, length());
        }
      }
      Graph g = list.build();
      return Instance(std::move(g), 0, 1, params.k, params.ell);
    }
    case RandomFamily::kClusterPlusX: {
      if (params.x < 0 || params.x > params.n || params.n < 2) {
        throw InputError("cluster-plus-x needs 0 <= x <= n and n >= 2");
      }
      list.n = params.n;
      std::vector<Vertex> order(static_cast<std::size_t>(params.n));
      for (Vertex v = 0; v < params.n; ++v) order[v] = v;
      for (std::size_t i = order.size(); i > 1; --i) {
        std::swap(order[i - 1], order[rng.below(i)]);
      }
      const std::vector<Vertex> x_set(order.begin(), order.begin() + params.x);
      const std::vector<Vertex> rest(order.begin() + params.x, order.end());
      const auto clique_count =
          std::max<std::uint64_t>(1, rest.size() / 3 + rng.below(2));
      std::vector<std::vector<Vertex>> cliques(clique_count);
      for (Vertex v : rest) cliques[rng.below(clique_count)].push_back(v);
      for (const auto& c : cliques) {
        for (std::size_t i = 0; i < c.size(); ++i) {
          for (std::size_t j = i + 1; j < c.size(); ++j) list.add(c[i], c[j], length());
        }
      }
      for (Vertex a : x_set) {
        for (Vertex v = 0; v < params.n; ++v) {
          if (v != a && rng.coin(params.p)) list.add(a, v, length());
        }
      }
      if (!x_set.empty()) connect_through(list, rng, x_set, params.max_length);
      break;
    }
    case RandomFamily::kTreePlusF: {
      if (params.n < 2 || params.f < 0) throw InputError("tree-plus-f needs n >= 2, f >= 0");
      const std::int64_t room =
          static_cast<std::int64_t>(params.n) * (params.n - 1) / 2 - (params.n - 1);
      if (params.f > room) throw InputError("too many extra edges for n");
      list.n = params.n;
      for (Vertex v = 1; v < params.n; ++v) {
        list.add(static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(v))), v, length());
      }
      std::int32_t added = 0;
      while (added < params.f) {
        const auto u = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(params.n)));
        const auto v = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(params.n)));
        if (list.add(u, v, length())) ++added;
      }
      break;
    }
  }
  Graph g = list.build();
  const auto [s, t] = pick_terminals(g, rng);
  return Instance(std::move(g), s, t, params.k, params.ell);
}

bool is_bipartite(const Graph& g) {
  std::vector<std::int8_t> color(static_cast<std::size_t>(g.vertex_count()), -1);
  for (Vertex root = 0; root < g.vertex_count(); ++root) {
    if (color[root] >= 0) continue;
    color[root] = 0;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (const Arc& a : g.neighbors(v)) {
        if (color[a.to] < 0) {
          color[a.to] = static_cast<std::int8_t>(1 - color[v]);
          queue.push_back(a.to);
        } else if (color[a.to] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::int32_t degeneracy(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<std::int32_t> deg(n);
  std::vector<std::uint8_t> gone(n, 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) deg[v] = g.degree(v);
  std::int32_t best = 0;
  for (std::size_t round = 0; round < n; ++round) {
    Vertex pick = -1;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (gone[v] == 0 && (pick < 0 || deg[v] < deg[pick])) pick = v;
    }
    best = std::max(best, deg[pick]);
    gone[pick] = 1;
    for (const Arc& a : g.neighbors(pick)) {
      if (gone[a.to] == 0) --deg[a.to];
    }
  }
  return best;
}

}  // namespace mve
