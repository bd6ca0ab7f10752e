#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "prodstruct/decomposition.hpp"
#include "prodstruct/graph.hpp"

namespace prodstruct::exact {

using Mask = std::uint32_t;

/// Absolute ceiling for every subset-based oracle, independent of overrides.
inline constexpr int hard_limit = 24;

struct Options {
  std::optional<int> max_n;  // overrides the oracle's default cap, never beyond hard_limit
};

inline void check_cap(const std::string& oracle, const Graph& g, int default_cap, const Options& opt) {
  int cap = std::min(opt.max_n.value_or(default_cap), hard_limit);
  if (g.order() > cap) throw instance_too_large(oracle, g.order(), cap);
}

inline Mask bit(int v) { return Mask{1} << v; }
inline Mask full_mask(int n) { return n >= 32 ? ~Mask{0} : bit(n) - 1; }
inline int popcount(Mask m) { return std::popcount(m); }
inline int lowest(Mask m) { return std::countr_zero(m); }

inline std::vector<Vertex> mask_vertices(Mask m) {
  std::vector<Vertex> out;
  for (; m; m &= m - 1) out.push_back(lowest(m));
  return out;
}

inline Mask to_mask(const std::vector<Vertex>& vs) {
  Mask m = 0;
  for (Vertex v : vs) m |= bit(v);
  return m;
}

/// Vertices outside eliminated ∪ {v} reachable from v through `eliminated`:
/// the higher neighbours of v in the fill-in graph of any ordering that
/// eliminates `eliminated` first and v next.
inline Mask fill_neighbours(const std::vector<Mask>& adj, Mask eliminated, int v) {
  Mask seen = bit(v), frontier = bit(v), out = 0;
  while (frontier) {
    int u = lowest(frontier);
    frontier &= frontier - 1;
    Mask nb = adj[u] & ~seen;
    seen |= nb;
    out |= nb & ~eliminated;
    frontier |= nb & eliminated;
  }
  return out;
}

/// Vertices of `set` with a neighbour outside it.
inline Mask boundary(const std::vector<Mask>& adj, Mask set, int n) {
  Mask out = 0;
  for (Mask m = set; m; m &= m - 1) {
    int v = lowest(m);
    if (adj[v] & ~set & full_mask(n)) out |= bit(v);
  }
  return out;
}

/// min over orderings of max_i cost(v_i, {v_1..v_{i-1}}), by DP over subsets.
/// Returns the value and an optimal ordering. Cost values must be >= 0.
template <class Cost>
std::pair<int, std::vector<Vertex>> min_max_ordering(int n, Cost cost) {
  const std::size_t states = std::size_t{1} << n;
  std::vector<int> best(states, std::numeric_limits<int>::max());
  std::vector<std::int8_t> last(states, -1);
  best[0] = -1;
  for (std::size_t s = 1; s < states; ++s) {
    Mask set = static_cast<Mask>(s);
    for (Mask m = set; m; m &= m - 1) {
      int v = lowest(m);
      Mask before = set & ~bit(v);
      int prev = best[before];
      if (prev >= best[s]) continue;
      int value = std::max(prev, cost(v, before));
      if (value < best[s]) {
        best[s] = value;
        last[s] = static_cast<std::int8_t>(v);
      }
    }
  }
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  Mask s = full_mask(n);
  for (int i = n - 1; i >= 0; --i) {
    order[i] = last[s];
    s &= ~bit(order[i]);
  }
  return {n == 0 ? -1 : best[full_mask(n)], order};
}

/// Bags {v} ∪ Q(v) of an elimination ordering, joined into a tree by attaching each
/// bag to the bag of its earliest-eliminated higher neighbour. Components are chained.
inline TreeDecomposition elimination_tree_decomposition(const Graph& g, const std::vector<Vertex>& order) {
  const int n = g.order();
  auto adj = adjacency_masks(g);
  std::vector<int> pos(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  TreeDecomposition td{n, std::vector<Bag>(static_cast<std::size_t>(n)), {}};
  Mask eliminated = 0;
  int previous_root = -1;
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    Mask q = fill_neighbours(adj, eliminated, v);
    td.bags[i] = mask_vertices(q | bit(v));
    if (q) {
      int parent = n;
      for (Mask m = q; m; m &= m - 1) parent = std::min(parent, pos[lowest(m)]);
      td.tree_edges.emplace_back(i, parent);
    } else {
      if (previous_root != -1) td.tree_edges.emplace_back(previous_root, i);
      previous_root = i;
    }
    eliminated |= bit(v);
  }
  return td.normalize();
}

/// Maximal cliques of the fill-in graph of an ordering, sorted; this is the bag family
/// of the clique tree of that chordal completion.
inline std::vector<Mask> completion_cliques(const std::vector<Mask>& adj, const std::vector<Vertex>& order) {
  std::vector<Mask> bags;
  Mask eliminated = 0;
  for (Vertex v : order) {
    bags.push_back(fill_neighbours(adj, eliminated, v) | bit(v));
    eliminated |= bit(v);
  }
  std::vector<Mask> maximal;
  for (std::size_t i = 0; i < bags.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < bags.size() && !dominated; ++j)
      if (j != i && (bags[i] & bags[j]) == bags[i] && (bags[i] != bags[j] || j < i)) dominated = true;
    if (!dominated) maximal.push_back(bags[i]);
  }
  std::sort(maximal.begin(), maximal.end());
  return maximal;
}

/// Result of an oracle: value plus an optional witness of matching quality.
struct Result {
  int value = 0;
  std::vector<Vertex> ordering;                  // layout / elimination order when meaningful
  std::optional<TreeDecomposition> decomposition;
  std::vector<int> parent;                       // elimination forest (treedepth)
};

}  // namespace prodstruct::exact
