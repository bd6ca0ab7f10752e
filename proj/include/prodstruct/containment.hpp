#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "prodstruct/graph.hpp"

namespace prodstruct {

namespace detail {

// Guest search order: start at a max-degree vertex, then always take the vertex with
// the most already-ordered neighbours (ties: higher degree, then lower id).
inline std::vector<Vertex> containment_order(const Graph& h) {
  const int n = h.order();
  std::vector<Vertex> order;
  std::vector<int> placed_nb(static_cast<std::size_t>(n), 0);
  std::vector<char> placed(static_cast<std::size_t>(n), 0);
  for (int step = 0; step < n; ++step) {
    Vertex best = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (placed[v]) continue;
      if (best == -1 || placed_nb[v] > placed_nb[best] ||
          (placed_nb[v] == placed_nb[best] && h.degree(v) > h.degree(best)))
        best = v;
    }
    placed[best] = 1;
    order.push_back(best);
    for (Vertex w : h.neighbors(best)) ++placed_nb[w];
  }
  return order;
}

}  // namespace detail

/// Searches for an injective map phi with uv in E(h) => phi(u)phi(v) in E(g).
/// Deterministic backtracking; returns phi indexed by guest vertex, or nullopt.
inline std::optional<std::vector<Vertex>> subgraph_contained(const Graph& h, const Graph& g) {
  const int nh = h.order(), ng = g.order();
  if (nh > ng) return std::nullopt;
  if (nh == 0) return std::vector<Vertex>{};
  if (h.size() > g.size() || h.max_degree() > g.max_degree()) return std::nullopt;

  std::vector<char> host_adj(static_cast<std::size_t>(ng) * ng, 0);
  for (auto [u, v] : g.edges()) host_adj[u * ng + v] = host_adj[v * ng + u] = 1;

  const auto order = detail::containment_order(h);
  std::vector<int> pos(static_cast<std::size_t>(nh));
  for (int i = 0; i < nh; ++i) pos[order[i]] = i;
  // earlier[i]: neighbours of order[i] that precede it in the search order.
  std::vector<std::vector<Vertex>> earlier(static_cast<std::size_t>(nh));
  for (int i = 0; i < nh; ++i)
    for (Vertex w : h.neighbors(order[i]))
      if (pos[w] < i) earlier[i].push_back(w);

  std::vector<Vertex> phi(static_cast<std::size_t>(nh), -1);
  std::vector<char> used(static_cast<std::size_t>(ng), 0);
  std::vector<Vertex> all_hosts(static_cast<std::size_t>(ng));
  for (Vertex v = 0; v < ng; ++v) all_hosts[v] = v;

  auto fits = [&](int i, Vertex x) {
    if (used[x] || g.degree(x) < h.degree(order[i])) return false;
    for (Vertex w : earlier[i])
      if (!host_adj[phi[w] * ng + x]) return false;
    return true;
  };

  auto search = [&](auto&& self, int i) -> bool {
    if (i == nh) return true;
    const auto& candidates = earlier[i].empty() ? all_hosts : g.neighbors(phi[earlier[i].front()]);
    for (Vertex x : candidates) {
      if (!fits(i, x)) continue;
      phi[order[i]] = x;
      used[x] = 1;
      if (self(self, i + 1)) return true;
      used[x] = 0;
    }
    phi[order[i]] = -1;
    return false;
  };

  if (!search(search, 0)) return std::nullopt;
  return phi;
}

/// Checks that phi is an injective edge-preserving map from h into g.
inline bool is_subgraph_map(const Graph& h, const Graph& g, const std::vector<Vertex>& phi) {
  if (static_cast<int>(phi.size()) != h.order()) return false;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  for (Vertex x : phi) {
    if (x < 0 || x >= g.order() || seen[x]) return false;
    seen[x] = 1;
  }
  for (auto [u, v] : h.edges())
    if (!g.adjacent(phi[u], phi[v])) return false;
  return true;
}

}  // namespace prodstruct
