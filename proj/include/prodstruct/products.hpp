#pragma once

#include <vector>

#include "prodstruct/graph.hpp"

// Product vertex (i, j) has id i * |V(b)| + j throughout.

namespace prodstruct {

inline Vertex product_id(int i, int j, int nb) { return i * nb + j; }

inline Graph cartesian(const Graph& a, const Graph& b) {
  const int na = a.order(), nb = b.order();
  std::vector<Edge> edges;
  for (int i = 0; i < na; ++i)
    for (auto [x, y] : b.edges()) edges.emplace_back(product_id(i, x, nb), product_id(i, y, nb));
  for (auto [u, v] : a.edges())
    for (int j = 0; j < nb; ++j) edges.emplace_back(product_id(u, j, nb), product_id(v, j, nb));
  return Graph(na * nb, edges);
}

inline Graph direct(const Graph& a, const Graph& b) {
  const int nb = b.order();
  std::vector<Edge> edges;
  for (auto [u, v] : a.edges())
    for (auto [x, y] : b.edges()) {
      edges.emplace_back(product_id(u, x, nb), product_id(v, y, nb));
      edges.emplace_back(product_id(u, y, nb), product_id(v, x, nb));
    }
  return Graph(a.order() * nb, edges);
}

inline Graph strong(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = cartesian(a, b).edges();
  for (const Edge& e : direct(a, b).edges()) edges.push_back(e);
  return Graph(a.order() * b.order(), edges);
}

/// Arc (x,y)->(x',y') iff each coordinate stays or follows an arc, excluding x=x', y=y'.
inline Digraph directed_strong(const Digraph& d1, const Digraph& d2) {
  const int n1 = d1.order(), n2 = d2.order();
  std::vector<Arc> arcs;
  for (int x = 0; x < n1; ++x) {
    std::vector<Vertex> xs{x};
    for (Vertex h : d1.out_neighbors(x)) xs.push_back(h);
    for (int y = 0; y < n2; ++y) {
      std::vector<Vertex> ys{y};
      for (Vertex h : d2.out_neighbors(y)) ys.push_back(h);
      for (Vertex x2 : xs)
        for (Vertex y2 : ys)
          if (x2 != x || y2 != y) arcs.emplace_back(product_id(x, y, n2), product_id(x2, y2, n2));
    }
  }
  return Digraph(n1 * n2, arcs);
}

}  // namespace prodstruct
