// Exact solver for unit-length instances parameterized by a cluster vertex
// deletion set X.
//
// Deletions are enumerated at twin-class granularity: inside each clique,
// vertices with the same neighborhood in X form a class, and a "unit" is
// either all edges between two classes of one clique or all edges between
// a class and one vertex of X. Normalizing a solution class by class
// makes every deletion set a union of units without increasing its size
// or decreasing the s-t distance.
//
// Outline: enumerate deletions inside G[X]; guess, for every non-adjacent
// pair of X, the length of its shortest connection through a single
// non-terminal clique; per non-terminal clique buy the cheapest set of
// units that keeps every such connection at or above its guess; drop those
// cliques, stand in for them with guessed-length edges, and search the
// remaining units of the (at most two) cliques holding s and t.

#include <algorithm>
#include <deque>
#include <functional>
#include <map>

#include "mve/errors.hpp"
#include "mve/exact.hpp"
#include "mve/paths.hpp"

namespace mve {
namespace {

constexpr std::int32_t kNoBound = 0;        // adjacent pair, nothing to enforce
constexpr std::int32_t kUnreachable = -1;   // guess "no connection"

struct Unit {
  std::vector<EdgeId> edges;
  // Endpoints at class level: class index `a` and either class `b` or X
  // index `x` (exactly one of b, x is >= 0).
  std::int32_t a = -1;
  std::int32_t b = -1;
  std::int32_t x = -1;
};

struct CliqueModel {
  std::vector<std::vector<Vertex>> classes;
  std::vector<std::vector<std::int32_t>> class_x;  // X indices adjacent to class
  std::vector<Unit> units;
  bool terminal = false;
};

class CvdSolver {
 public:
  CvdSolver(const Instance& inst, const ClusterDecomposition& dec, SolveContext& ctx)
      : inst_(inst), g_(inst.graph), dec_(dec), ctx_(ctx) {
    const auto n = static_cast<std::size_t>(g_.vertex_count());
    x_index_.assign(n, -1);
    for (std::size_t i = 0; i < dec.deletion_set.size(); ++i) {
      x_index_[dec.deletion_set[i]] = static_cast<std::int32_t>(i);
    }
    for (const auto& clique : dec.cliques) models_.push_back(model_clique(clique));
    for (EdgeId e = 0; e < g_.edge_count(); ++e) {
      if (x_index_[g_.edge(e).u] >= 0 && x_index_[g_.edge(e).v] >= 0) {
        x_edges_.push_back(e);
      }
    }
    for (std::size_t c = 0; c < models_.size(); ++c) {
      if (models_[c].terminal) terminal_cliques_.push_back(c);
    }
    cache_.resize(models_.size());
  }

  std::optional<Solution> solve() {
    const auto ex = x_edges_.size();
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << ex); ++pick) {
      const auto cost = static_cast<std::int64_t>(__builtin_popcountll(pick));
      if (cost > inst_.k) continue;
      std::vector<EdgeId> removed_x;
      for (std::size_t i = 0; i < ex; ++i) {
        if ((pick >> i) & 1U) removed_x.push_back(x_edges_[i]);
      }
      if (auto sol = with_x_deletions(removed_x)) return sol;
    }
    return std::nullopt;
  }

 private:
  [[nodiscard]] std::int32_t x_count() const {
    return static_cast<std::int32_t>(dec_.deletion_set.size());
  }

  CliqueModel model_clique(const std::vector<Vertex>& clique) {
    CliqueModel m;
    std::map<std::vector<std::int32_t>, std::int32_t> by_signature;
    auto x_neighbors = [&](Vertex v) {
      std::vector<std::int32_t> out;
      for (const Arc& a : g_.neighbors(v)) {
        if (x_index_[a.to] >= 0) out.push_back(x_index_[a.to]);
      }
      std::sort(out.begin(), out.end());
      return out;
    };
    for (Vertex v : clique) {
      if (v == inst_.s || v == inst_.t) {
        m.terminal = true;
        m.classes.push_back({v});
        m.class_x.push_back(x_neighbors(v));
        continue;
      }
      auto sig = x_neighbors(v);
      auto [it, inserted] =
          by_signature.try_emplace(sig, static_cast<std::int32_t>(m.classes.size()));
      if (inserted) {
        m.classes.push_back({v});
        m.class_x.push_back(std::move(sig));
      } else {
        m.classes[it->second].push_back(v);
      }
    }
    const auto k = static_cast<std::int32_t>(m.classes.size());
    for (std::int32_t a = 0; a < k; ++a) {
      for (std::int32_t b = a + 1; b < k; ++b) {
        Unit u{{}, a, b, -1};
        for (Vertex p : m.classes[a]) {
          for (Vertex q : m.classes[b]) u.edges.push_back(*g_.find_edge(p, q));
        }
        m.units.push_back(std::move(u));
      }
      for (std::int32_t xi : m.class_x[a]) {
        Unit u{{}, a, -1, xi};
        for (Vertex p : m.classes[a]) {
          u.edges.push_back(*g_.find_edge(p, dec_.deletion_set[xi]));
        }
        m.units.push_back(std::move(u));
      }
    }
    return m;
  }

  // Shortest connection from X vertex `from` to X vertex `to` whose inner
  // vertices lie in one clique, measured on its class graph. 0 = none.
  static std::int32_t through_clique(const CliqueModel& m,
                                     const std::vector<std::uint8_t>& deleted,
                                     std::int32_t from, std::int32_t to) {
    const auto k = m.classes.size();
    std::vector<std::vector<std::uint8_t>> link(k, std::vector<std::uint8_t>(k, 0));
    std::vector<std::uint8_t> start(k, 0);
    std::vector<std::uint8_t> finish(k, 0);
    for (std::size_t i = 0; i < m.units.size(); ++i) {
      if (deleted[i] != 0) continue;
      const Unit& u = m.units[i];
      if (u.b >= 0) {
        link[u.a][u.b] = link[u.b][u.a] = 1;
      } else {
        if (u.x == from) start[u.a] = 1;
        if (u.x == to) finish[u.a] = 1;
      }
    }
    std::vector<std::int32_t> dist(k, -1);
    std::deque<std::size_t> queue;
    for (std::size_t c = 0; c < k; ++c) {
      if (start[c] != 0) {
        dist[c] = 0;
        queue.push_back(c);
      }
    }
    while (!queue.empty()) {
      const auto c = queue.front();
      queue.pop_front();
      if (finish[c] != 0) return dist[c] + 2;
      for (std::size_t d = 0; d < k; ++d) {
        if (link[c][d] != 0 && dist[d] < 0) {
          dist[d] = dist[c] + 1;
          queue.push_back(d);
        }
      }
    }
    return 0;
  }

  static bool respects(const CliqueModel& m, const std::vector<std::uint8_t>& deleted,
                       const std::vector<std::int32_t>& bound, std::int32_t xc) {
    std::size_t p = 0;
    for (std::int32_t i = 0; i < xc; ++i) {
      for (std::int32_t j = i + 1; j < xc; ++j, ++p) {
        if (bound[p] == kNoBound) continue;
        const auto d = through_clique(m, deleted, i, j);
        if (d == 0) continue;
        if (bound[p] == kUnreachable || d < bound[p]) return false;
      }
    }
    return true;
  }

  struct Purchase {
    std::int64_t cost = 0;
    std::vector<std::size_t> units;
  };

  // Cheapest unit set making clique `c` respect `bound`, if one costs at
  // most `limit`. Cached per bound vector.
  std::optional<Purchase> cheapest(std::size_t c, const std::vector<std::int32_t>& bound,
                                   std::int64_t limit) {
    auto& memo = cache_[c];
    if (auto it = memo.find(bound); it != memo.end()) {
      if (!it->second.has_value()) {
        // Stored as "nothing within the limit it was searched with".
        if (it->second.limit >= limit) return std::nullopt;
      } else {
        if (it->second.best->cost <= limit) return it->second.best;
        return std::nullopt;
      }
    }
    const CliqueModel& m = models_[c];
    std::vector<std::uint8_t> deleted(m.units.size(), 0);
    std::optional<Purchase> best;
    std::vector<std::size_t> chosen;
    std::int64_t cap = limit;
    // Subsets in DFS order; a respecting set is never extended.
    std::function<void(std::size_t, std::int64_t)> dfs = [&](std::size_t next,
                                                             std::int64_t cost) {
      ctx_.tick();
      if (respects(m, deleted, bound, x_count())) {
        if (!best || cost < best->cost) {
          best = Purchase{cost, chosen};
          cap = cost - 1;
        }
        return;
      }
      for (std::size_t i = next; i < m.units.size(); ++i) {
        const auto add = static_cast<std::int64_t>(m.units[i].edges.size());
        if (cost + add > cap) continue;
        deleted[i] = 1;
        chosen.push_back(i);
        dfs(i + 1, cost + add);
        chosen.pop_back();
        deleted[i] = 0;
      }
    };
    dfs(0, 0);
    Memo entry;
    entry.limit = limit;
    entry.best = best;
    memo[bound] = entry;
    return best;
  }

  std::optional<Solution> with_x_deletions(const std::vector<EdgeId>& removed_x) {
    const std::int32_t xc = x_count();
    EdgeMask x_mask = g_.empty_mask();
    for (EdgeId e : removed_x) x_mask[e] = 1;
    auto x_adjacent = [&](std::int32_t i, std::int32_t j) {
      const auto e = g_.find_edge(dec_.deletion_set[i], dec_.deletion_set[j]);
      return e.has_value() && x_mask[*e] == 0;
    };

    // Guess domains: only non-adjacent pairs that some non-terminal clique
    // can connect get finite candidates, up to (#classes + 1).
    std::vector<std::vector<std::int32_t>> domain;
    for (std::int32_t i = 0; i < xc; ++i) {
      for (std::int32_t j = i + 1; j < xc; ++j) {
        if (x_adjacent(i, j)) {
          domain.push_back({kNoBound});
          continue;
        }
        std::int32_t longest = 0;
        for (const auto& m : models_) {
          if (m.terminal) continue;
          const std::vector<std::uint8_t> none(m.units.size(), 0);
          if (through_clique(m, none, i, j) != 0) {
            longest = std::max(longest, static_cast<std::int32_t>(m.classes.size()) + 1);
          }
        }
        std::vector<std::int32_t> values;
        for (std::int32_t d = 2; d <= longest; ++d) values.push_back(d);
        values.push_back(kUnreachable);
        domain.push_back(std::move(values));
      }
    }

    const auto spent_x = static_cast<std::int64_t>(removed_x.size());
    std::vector<std::size_t> digit(domain.size(), 0);
    while (true) {
      std::vector<std::int32_t> bound(domain.size());
      for (std::size_t p = 0; p < domain.size(); ++p) bound[p] = domain[p][digit[p]];
      if (auto sol = with_guess(removed_x, x_mask, bound, spent_x)) return sol;
      std::size_t p = 0;
      while (p < domain.size() && ++digit[p] == domain[p].size()) digit[p++] = 0;
      if (p == domain.size()) break;
    }
    return std::nullopt;
  }

  std::optional<Solution> with_guess(const std::vector<EdgeId>& removed_x,
                                     const EdgeMask& x_mask,
                                     const std::vector<std::int32_t>& bound,
                                     std::int64_t spent) {
    ctx_.tick();
    std::vector<EdgeId> deletion = removed_x;
    for (std::size_t c = 0; c < models_.size(); ++c) {
      if (models_[c].terminal) continue;
      auto bought = cheapest(c, bound, inst_.k - spent);
      if (!bought) return std::nullopt;
      spent += bought->cost;
      for (std::size_t u : bought->units) {
        const auto& edges = models_[c].units[u].edges;
        deletion.insert(deletion.end(), edges.begin(), edges.end());
      }
    }
    return finish(deletion, x_mask, bound, inst_.k - spent);
  }

  // Searches the terminal cliques' units on X plus the terminal cliques,
  // with guessed-length edges standing in for the discarded cliques.
  std::optional<Solution> finish(std::vector<EdgeId> deletion, const EdgeMask& x_mask,
                                 const std::vector<std::int32_t>& bound,
                                 std::int64_t budget) {
    const auto n = static_cast<std::size_t>(g_.vertex_count());
    std::vector<Vertex> local(n, -1);
    Vertex count = 0;
    for (Vertex v : dec_.deletion_set) local[v] = count++;
    for (std::size_t c : terminal_cliques_) {
      for (const auto& cls : models_[c].classes) {
        for (Vertex v : cls) local[v] = count++;
      }
    }
    Graph h(count);
    std::vector<EdgeId> to_local(static_cast<std::size_t>(g_.edge_count()), -1);
    for (EdgeId e = 0; e < g_.edge_count(); ++e) {
      const Edge& ed = g_.edge(e);
      if (local[ed.u] < 0 || local[ed.v] < 0 || x_mask[e] != 0) continue;
      to_local[e] = h.add_edge(local[ed.u], local[ed.v], 1);
    }
    std::size_t p = 0;
    for (std::int32_t i = 0; i < x_count(); ++i) {
      for (std::int32_t j = i + 1; j < x_count(); ++j, ++p) {
        if (bound[p] > 0) {
          h.add_edge(local[dec_.deletion_set[i]], local[dec_.deletion_set[j]], bound[p]);
        }
      }
    }
    std::vector<const Unit*> units;
    for (std::size_t c : terminal_cliques_) {
      for (const auto& u : models_[c].units) units.push_back(&u);
    }
    EdgeMask mask = h.empty_mask();
    std::vector<std::size_t> chosen;
    const Vertex hs = local[inst_.s];
    const Vertex ht = local[inst_.t];
    std::function<bool(std::size_t, std::int64_t)> dfs = [&](std::size_t next,
                                                             std::int64_t cost) {
      ctx_.tick();
      if (st_distance(h, hs, ht, &mask) >= inst_.ell) return true;
      for (std::size_t i = next; i < units.size(); ++i) {
        const auto add = static_cast<std::int64_t>(units[i]->edges.size());
        if (cost + add > budget) continue;
        for (EdgeId e : units[i]->edges) mask[to_local[e]] = 1;
        chosen.push_back(i);
        if (dfs(i + 1, cost + add)) return true;
        chosen.pop_back();
        for (EdgeId e : units[i]->edges) mask[to_local[e]] = 0;
      }
      return false;
    };
    if (!dfs(0, 0)) return std::nullopt;
    for (std::size_t i : chosen) {
      deletion.insert(deletion.end(), units[i]->edges.begin(), units[i]->edges.end());
    }
    Solution sol = make_solution(inst_, std::move(deletion));
    if (sol.cardinality() > inst_.k || !(sol.achieved_distance >= inst_.ell)) {
      throw std::logic_error("cvd_fpt: assembled solution is infeasible");
    }
    return sol;
  }

  struct Memo {
    std::int64_t limit = 0;
    std::optional<Purchase> best;
    [[nodiscard]] bool has_value() const { return best.has_value(); }
  };

  const Instance& inst_;
  const Graph& g_;
  const ClusterDecomposition& dec_;
  SolveContext& ctx_;
  std::vector<std::int32_t> x_index_;
  std::vector<CliqueModel> models_;
  std::vector<EdgeId> x_edges_;
  std::vector<std::size_t> terminal_cliques_;
  std::vector<std::map<std::vector<std::int32_t>, Memo>> cache_;
};

}  // namespace

std::optional<Solution> cvd_fpt(const Instance& inst,
                                const ClusterDecomposition& decomposition,
                                SolveContext* ctx) {
  if (!inst.unit_length()) {
    throw PreconditionError("cvd_fpt requires unit edge lengths");
  }
  if (!is_valid_decomposition(inst.graph, decomposition)) {
    throw InputError("invalid cluster decomposition");
  }
  if (auto trivial = trivial_solution(inst)) return trivial;
  SolveContext local;
  CvdSolver solver(inst, decomposition, ctx != nullptr ? *ctx : local);
  return solver.solve();
}

}  // namespace mve
