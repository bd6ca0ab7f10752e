#pragma once

#include <algorithm>
#include <functional>
#include <unordered_map>
#include <vector>

#include "prodstruct/exact/common.hpp"

namespace prodstruct::exact {

inline constexpr int treewidth_cap = 16;
inline constexpr int pathwidth_cap = 16;
inline constexpr int bandwidth_cap = 12;
inline constexpr int treedepth_cap = 16;

/// Exact treewidth; the witness is the clique tree of an optimal elimination ordering.
inline Result treewidth_exact(const Graph& g, const Options& opt = {}) {
  check_cap("treewidth_exact", g, treewidth_cap, opt);
  auto adj = adjacency_masks(g);
  auto [value, order] =
      min_max_ordering(g.order(), [&](int v, Mask before) { return popcount(fill_neighbours(adj, before, v)); });
  Result r{value, order, simplify(elimination_tree_decomposition(g, order)), {}};
  return r;
}

/// Path-decomposition from a layout: bag i = {v_i} ∪ boundary(v_1..v_{i-1}).
inline PathDecomposition layout_path_decomposition(const Graph& g, const std::vector<Vertex>& order) {
  auto adj = adjacency_masks(g);
  PathDecomposition pd{g.order(), {}};
  Mask placed = 0;
  for (Vertex v : order) {
    pd.bags.push_back(mask_vertices(boundary(adj, placed, g.order()) | bit(v)));
    placed |= bit(v);
  }
  return pd;
}

/// Exact pathwidth as the vertex separation number.
inline Result pathwidth_exact(const Graph& g, const Options& opt = {}) {
  check_cap("pathwidth_exact", g, pathwidth_cap, opt);
  auto adj = adjacency_masks(g);
  const int n = g.order();
  auto [value, order] =
      min_max_ordering(n, [&](int v, Mask before) { return popcount(boundary(adj, before | bit(v), n)); });
  Result r{value, order, layout_path_decomposition(g, order).to_tree(), {}};
  return r;
}

namespace detail {

inline bool bandwidth_feasible(const Graph& g, int k, std::vector<Vertex>& layout) {
  const int n = g.order();
  std::vector<int> pos(static_cast<std::size_t>(n), -1);
  std::vector<int> unplaced_nb(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) unplaced_nb[v] = g.degree(v);
  layout.assign(static_cast<std::size_t>(n), -1);

  auto place = [&](auto&& self, int p) -> bool {
    if (p == n) return true;
    // The vertex k positions back must be finished once p is filled.
    int forced = -1;
    if (p - k >= 0 && unplaced_nb[layout[p - k]] > 0) {
      if (unplaced_nb[layout[p - k]] > 1) return false;
      for (Vertex w : g.neighbors(layout[p - k]))
        if (pos[w] == -1) forced = w;
    }
    for (Vertex v = 0; v < n; ++v) {
      if (pos[v] != -1 || (forced != -1 && v != forced)) continue;
      bool ok = true;
      for (Vertex w : g.neighbors(v))
        if (pos[w] != -1 && p - pos[w] > k) ok = false;
      if (!ok) continue;
      // Every placed vertex with open neighbours needs a free slot within reach.
      pos[v] = p;
      layout[p] = v;
      for (Vertex w : g.neighbors(v)) --unplaced_nb[w];
      bool room = true;
      for (int q = std::max(0, p - k + 1); q <= p && room; ++q)
        if (unplaced_nb[layout[q]] > q + k - p) room = false;
      if (room && self(self, p + 1)) return true;
      for (Vertex w : g.neighbors(v)) ++unplaced_nb[w];
      pos[v] = -1;
      layout[p] = -1;
    }
    return false;
  };
  return place(place, 0);
}

}  // namespace detail

/// Exact bandwidth by increasing k with a backtracking layout search per k.
inline Result bandwidth_exact(const Graph& g, const Options& opt = {}) {
  check_cap("bandwidth_exact", g, bandwidth_cap, opt);
  const int n = g.order();
  if (n == 0) return {0, {}, {}, {}};
  if (g.size() == 0) {
    std::vector<Vertex> id(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) id[i] = i;
    return {0, id, {}, {}};
  }
  int k = (g.max_degree() + 1) / 2;
  std::vector<Vertex> layout;
  while (!detail::bandwidth_feasible(g, k, layout)) ++k;
  return {k, layout, {}, {}};
}

/// Exact treedepth: td(S) = 1 + min_v max over components of S - v, memoized on connected sets.
/// The witness is an elimination forest given as a parent array (-1 for roots).
inline Result treedepth_exact(const Graph& g, const Options& opt = {}) {
  check_cap("treedepth_exact", g, treedepth_cap, opt);
  const int n = g.order();
  auto adj = adjacency_masks(g);
  std::unordered_map<Mask, std::pair<int, int>> memo;  // set -> (depth, chosen root)

  auto components = [&](Mask set) {
    std::vector<Mask> out;
    while (set) {
      Mask comp = bit(lowest(set)), frontier = comp;
      while (frontier) {
        int u = lowest(frontier);
        frontier &= frontier - 1;
        Mask nb = adj[u] & set & ~comp;
        comp |= nb;
        frontier |= nb;
      }
      out.push_back(comp);
      set &= ~comp;
    }
    return out;
  };

  std::function<int(Mask)> depth = [&](Mask set) -> int {
    if (!set) return 0;
    auto comps = components(set);
    if (comps.size() > 1) {
      int d = 0;
      for (Mask c : comps) d = std::max(d, depth(c));
      return d;
    }
    if (auto it = memo.find(set); it != memo.end()) return it->second.first;
    int best = popcount(set) + 1, root = lowest(set);
    for (Mask m = set; m; m &= m - 1) {
      int v = lowest(m);
      int d = 1 + depth(set & ~bit(v));
      if (d < best) best = d, root = v;
      if (best == 1 + (popcount(set) > 1 ? 1 : 0)) break;
    }
    memo[set] = {best, root};
    return best;
  };

  Result r;
  r.value = depth(full_mask(n));
  r.parent.assign(static_cast<std::size_t>(n), -1);
  std::function<void(Mask, int)> build = [&](Mask set, int parent) {
    for (Mask c : components(set)) {
      int root = lowest(c);
      if (popcount(c) > 1) {
        depth(c);
        root = memo.at(c).second;
      }
      r.parent[root] = parent;
      build(c & ~bit(root), root);
    }
  };
  build(full_mask(n), -1);
  return r;
}

/// Number of vertices of a longest path in g.
inline int longest_path_order(const Graph& g, const Options& opt = {}) {
  check_cap("longest_path_order", g, 20, opt);
  const int n = g.order();
  if (n == 0) return 0;
  auto adj = adjacency_masks(g);
  // ends[S]: vertices v such that some path with vertex set S ends at v.
  std::vector<Mask> ends(std::size_t{1} << n, 0);
  int best = 1;
  for (int v = 0; v < n; ++v) ends[bit(v)] = bit(v);
  for (std::size_t s = 1; s < ends.size(); ++s) {
    Mask e = ends[s];
    if (!e) continue;
    best = std::max(best, popcount(static_cast<Mask>(s)));
    for (Mask m = e; m; m &= m - 1) {
      Mask ext = adj[lowest(m)] & ~static_cast<Mask>(s);
      for (Mask x = ext; x; x &= x - 1) ends[s | bit(lowest(x))] |= bit(lowest(x));
    }
  }
  return best;
}

}  // namespace prodstruct::exact
