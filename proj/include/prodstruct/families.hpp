#pragma once

#include <numeric>
#include <vector>

#include "prodstruct/graph.hpp"
#include "prodstruct/products.hpp"

namespace prodstruct {

inline Graph edgeless(int n) { return Graph(n); }

/// Path 0-1-...-(n-1).
inline Graph path(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

inline Graph cycle(int n) {
  if (n < 3) throw precondition_error("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

inline Graph complete(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, edges);
}

/// Parts occupy consecutive id ranges in the given order.
inline Graph complete_multipartite(const std::vector<int>& sizes) {
  std::vector<int> part;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] < 0) throw precondition_error("negative part size");
    part.insert(part.end(), sizes[i], static_cast<int>(i));
  }
  std::vector<Edge> edges;
  for (int u = 0; u < static_cast<int>(part.size()); ++u)
    for (int v = u + 1; v < static_cast<int>(part.size()); ++v)
      if (part[u] != part[v]) edges.emplace_back(u, v);
  return Graph(static_cast<int>(part.size()), edges);
}

/// K_{1,n} with centre 0 and leaves 1..n.
inline Graph star(int n) { return complete_multipartite({1, n}); }

inline Graph complete_bipartite(int a, int b) { return complete_multipartite({a, b}); }

/// P_m □ P_n; vertex (r, c) has id r * n + c.
inline Graph grid2(int m, int n) { return cartesian(path(m), path(n)); }

/// P_a □ P_b □ P_c; vertex (i, j, k) has id (i * b + j) * c + k.
inline Graph grid3(int a, int b, int c) { return cartesian(grid2(a, b), path(c)); }

}  // namespace prodstruct
