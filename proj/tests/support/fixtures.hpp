#pragma once

#include <initializer_list>
#include <tuple>

#include "mve/instance.hpp"

namespace fx {

using mve::Graph;
using mve::Instance;
using mve::Length;
using mve::Vertex;

inline Graph make_graph(Vertex n, std::initializer_list<std::tuple<Vertex, Vertex, Length>> edges) {
  Graph g(n);
  for (const auto& [u, v, len] : edges) g.add_edge(u, v, len);
  return g;
}

inline Graph unit_graph(Vertex n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v, 1);
  return g;
}

// s=0, a=1, b=2, t=3; edges s-a, a-t, s-b, b-t.
inline Graph diamond() { return unit_graph(4, {{0, 1}, {1, 3}, {0, 2}, {2, 3}}); }

// Cycle s-a-t-b-s with s=0, a=1, t=2, b=3.
inline Graph c4(Length sa = 1, Length at = 1, Length tb = 1, Length bs = 1) {
  return make_graph(4, {{0, 1, sa}, {1, 2, at}, {2, 3, tb}, {3, 0, bs}});
}

inline Graph path(Vertex n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1, 1);
  return g;
}

inline Graph cycle(Vertex n) {
  Graph g = path(n);
  g.add_edge(0, n - 1, 1);
  return g;
}

inline Graph complete(Vertex n, Length len = 1) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v, len);
  }
  return g;
}

}  // namespace fx
