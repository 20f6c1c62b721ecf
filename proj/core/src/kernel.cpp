#include "mve/kernel.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mve/errors.hpp"
#include "mve/structure.hpp"

namespace mve {
namespace {

struct WorkEdge {
  Length length = 0;
  // Original edge ids along the path from the smaller endpoint.
  std::vector<EdgeId> constituents;
  // Creation rank: original edges keep their id, new edges are numbered
  // after all originals in creation order.
  std::int64_t rank = 0;
};

// Mutable multigraph-free view used while applying the rules. Vertex ids
// are those of the source graph.
class Workspace {
 public:
  explicit Workspace(const Instance& inst)
      : source_(&inst), adj_(static_cast<std::size_t>(inst.graph.vertex_count())),
        alive_(static_cast<std::size_t>(inst.graph.vertex_count()), 1),
        next_rank_(inst.graph.edge_count()) {
    for (EdgeId e = 0; e < inst.graph.edge_count(); ++e) {
      const Edge& ed = inst.graph.edge(e);
      set_edge(ed.u, ed.v, WorkEdge{ed.length, {e}, e});
    }
  }

  [[nodiscard]] bool alive(Vertex v) const { return alive_[v] != 0; }
  [[nodiscard]] std::size_t degree(Vertex v) const { return adj_[v].size(); }
  [[nodiscard]] Vertex size() const { return static_cast<Vertex>(adj_.size()); }

  void remove_vertex(Vertex v) {
    for (const auto& [w, _] : adj_[v]) adj_[w].erase(v);
    adj_[v].clear();
    alive_[v] = 0;
  }

  bool rule1_pass(std::vector<ReductionEvent>& events) {
    bool any = false;
    bool changed = true;
    while (changed) {
      changed = false;
      for (Vertex v = 0; v < size(); ++v) {
        if (!alive(v) || is_terminal(v) || degree(v) != 1) continue;
        remove_vertex(v);
        events.emplace_back(DeleteDegreeOne{v});
        changed = any = true;
      }
    }
    return any;
  }

  bool rule2_pass(std::vector<ReductionEvent>& events) {
    bool any = false;
    bool changed = true;
    while (changed) {
      changed = false;
      for (Vertex v = 0; v < size(); ++v) {
        if (!alive(v) || is_terminal(v) || degree(v) != 2) continue;
        const Vertex u = adj_[v].begin()->first;
        const Vertex w = std::next(adj_[v].begin())->first;
        if (adj_[u].count(w) != 0) continue;
        events.emplace_back(contract(v, u, w));
        changed = any = true;
      }
    }
    return any;
  }

  ContractDegreeTwo contract(Vertex v, Vertex u, Vertex w) {
    const WorkEdge uv = adj_[u].at(v);
    const WorkEdge vw = adj_[v].at(w);
    ContractDegreeTwo ev;
    ev.vertex = v;
    ev.u = u;
    ev.w = w;
    ev.length = uv.length + vw.length;
    ev.constituents = oriented(uv, u, v);
    const auto tail = oriented(vw, v, w);
    ev.constituents.insert(ev.constituents.end(), tail.begin(), tail.end());
    remove_vertex(v);
    alive_[v] = 0;
    WorkEdge created{ev.length, ev.constituents, next_rank_++};
    if (u > w) std::reverse(created.constituents.begin(), created.constituents.end());
    set_edge(u, w, std::move(created));
    return ev;
  }

  void keep_only(const std::vector<std::uint8_t>& keep,
                 std::vector<ReductionEvent>& events) {
    DiscardComponent discard;
    for (Vertex v = 0; v < size(); ++v) {
      if (keep[v] == 0 && alive(v)) {
        remove_vertex(v);
        discard.vertices.push_back(v);
      }
    }
    if (!discard.vertices.empty()) events.emplace_back(std::move(discard));
  }

  [[nodiscard]] const std::map<Vertex, WorkEdge>& adjacency(Vertex v) const {
    return adj_[v];
  }

  // Builds the resulting graph. With `compact`, dead vertices are dropped
  // and ids renumbered ascending; otherwise ids are preserved.
  Instance materialize(bool compact, KernelTrace* trace) const {
    std::vector<Vertex> new_id(adj_.size(), -1);
    Vertex count = 0;
    for (Vertex v = 0; v < size(); ++v) {
      if (!compact || alive(v)) {
        new_id[v] = count++;
        if (trace != nullptr) trace->vertex_origin.push_back(v);
      }
    }
    struct Pending {
      std::int64_t rank;
      Vertex u, v;
      const WorkEdge* edge;
    };
    std::vector<Pending> pending;
    for (Vertex u = 0; u < size(); ++u) {
      for (const auto& [v, e] : adj_[u]) {
        if (u < v) pending.push_back({e.rank, u, v, &e});
      }
    }
    std::sort(pending.begin(), pending.end(),
              [](const Pending& a, const Pending& b) { return a.rank < b.rank; });
    Graph g(count);
    for (const auto& p : pending) {
      g.add_edge(new_id[p.u], new_id[p.v], p.edge->length);
      if (trace != nullptr) trace->edge_origin.push_back(p.edge->constituents);
    }
    return Instance(std::move(g), new_id[source_->s], new_id[source_->t],
                    source_->k, source_->ell);
  }

 private:
  [[nodiscard]] bool is_terminal(Vertex v) const {
    return v == source_->s || v == source_->t;
  }

  void set_edge(Vertex u, Vertex v, WorkEdge e) {
    adj_[u][v] = e;
    adj_[v][u] = std::move(e);
  }

  // Constituents of `e` listed from `from` towards `to`.
  static std::vector<EdgeId> oriented(const WorkEdge& e, Vertex from, Vertex to) {
    auto out = e.constituents;
    if (from > to) std::reverse(out.begin(), out.end());
    return out;
  }

  const Instance* source_;
  std::vector<std::map<Vertex, WorkEdge>> adj_;
  std::vector<std::uint8_t> alive_;
  std::int64_t next_rank_;
};

std::vector<std::uint8_t> st_components(const Instance& inst) {
  const auto label = connected_components(inst.graph);
  std::vector<std::uint8_t> keep(label.size(), 0);
  const bool joined = label[inst.s] == label[inst.t];
  for (std::size_t v = 0; v < label.size(); ++v) {
    keep[v] = joined && label[v] == label[inst.s] ? 1 : 0;
  }
  keep[inst.s] = keep[inst.t] = 1;
  return keep;
}

}  // namespace

std::pair<Instance, RuleDelta> apply_rule1(const Instance& inst) {
  Workspace ws(inst);
  RuleDelta delta;
  ws.rule1_pass(delta.events);
  return {ws.materialize(false, nullptr), std::move(delta)};
}

std::pair<Instance, RuleDelta> apply_rule2(const Instance& inst) {
  Workspace ws(inst);
  RuleDelta delta;
  ws.rule2_pass(delta.events);
  return {ws.materialize(false, nullptr), std::move(delta)};
}

KernelResult kernelize(const Instance& inst) {
  Workspace ws(inst);
  KernelTrace trace;
  ws.keep_only(st_components(inst), trace.events);
  bool changed = true;
  while (changed) {
    const bool r1 = ws.rule1_pass(trace.events);
    const bool r2 = ws.rule2_pass(trace.events);
    changed = r1 || r2;
  }
  Instance kernel = ws.materialize(true, &trace);
  return {std::move(kernel), std::move(trace)};
}

Graph replay_trace(const Instance& original, const KernelTrace& trace) {
  Workspace ws(original);
  for (const auto& event : trace.events) {
    if (const auto* d1 = std::get_if<DeleteDegreeOne>(&event)) {
      if (!original.graph.valid_vertex(d1->vertex) || !ws.alive(d1->vertex) ||
          ws.degree(d1->vertex) != 1 || d1->vertex == original.s ||
          d1->vertex == original.t) {
        throw ContractViolation("trace: invalid degree-one deletion");
      }
      ws.remove_vertex(d1->vertex);
    } else if (const auto* d2 = std::get_if<ContractDegreeTwo>(&event)) {
      const Vertex v = d2->vertex;
      if (!original.graph.valid_vertex(v) || !ws.alive(v) || ws.degree(v) != 2 ||
          v == original.s || v == original.t ||
          ws.adjacency(v).count(d2->u) == 0 || ws.adjacency(v).count(d2->w) == 0 ||
          ws.adjacency(d2->u).count(d2->w) != 0) {
        throw ContractViolation("trace: invalid degree-two contraction");
      }
      const auto replayed = ws.contract(v, d2->u, d2->w);
      if (!(replayed == *d2)) {
        throw ContractViolation("trace: contraction record mismatch");
      }
    } else {
      const auto& dc = std::get<DiscardComponent>(event);
      for (Vertex v : dc.vertices) {
        if (!original.graph.valid_vertex(v)) {
          throw ContractViolation("trace: invalid discarded vertex");
        }
        ws.remove_vertex(v);
      }
    }
  }
  KernelTrace rebuilt;
  Graph g = ws.materialize(true, &rebuilt).graph;
  if (rebuilt.vertex_origin != trace.vertex_origin ||
      rebuilt.edge_origin != trace.edge_origin) {
    throw ContractViolation("trace: id maps do not match replay");
  }
  return g;
}

Solution lift_solution(const Instance& original, const KernelTrace& trace,
                       const Solution& kernel_solution) {
  std::vector<EdgeId> lifted;
  lifted.reserve(kernel_solution.deleted_edges.size());
  for (EdgeId e : kernel_solution.deleted_edges) {
    if (e < 0 || static_cast<std::size_t>(e) >= trace.edge_origin.size() ||
        trace.edge_origin[e].empty()) {
      throw ContractViolation("lift_solution: unknown kernel edge " + std::to_string(e));
    }
    lifted.push_back(trace.edge_origin[e].front());
  }
  return make_solution(original, std::move(lifted));
}

KernelBound kernel_bound(const Graph& g) {
  KernelBound b;
  b.feedback_edges = static_cast<std::int64_t>(feedback_edge_set(g).size());
  b.max_vertices = 5 * b.feedback_edges + 2;
  b.max_edges = 6 * b.feedback_edges + 2;
  return b;
}

}  // namespace mve
