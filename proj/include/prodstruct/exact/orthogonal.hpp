#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "prodstruct/exact/widths.hpp"

namespace prodstruct::exact {

inline constexpr int twintw_cap = 7;
inline constexpr int twtw_cap = 8;

inline int clique_number(const Graph& g) {
  auto adj = adjacency_masks(g);
  int best = 0;
  auto grow = [&](auto&& self, Mask clique, Mask candidates, int size) -> void {
    best = std::max(best, size);
    if (size + popcount(candidates) <= best) return;
    for (Mask m = candidates; m; m &= m - 1) {
      int v = lowest(m);
      candidates &= ~bit(v);
      self(self, clique | bit(v), candidates & adj[v], size + 1);
    }
  };
  grow(grow, 0, full_mask(g.order()), 0);
  return best;
}

struct OrthogonalPair {
  int value = 0;
  TreeDecomposition first;
  TreeDecomposition second;
};

namespace detail {

inline int family_orthogonality(const std::vector<Mask>& a, const std::vector<Mask>& b, int stop_at) {
  int worst = 0;
  for (Mask x : a)
    for (Mask y : b) {
      worst = std::max(worst, popcount(x & y));
      if (worst >= stop_at) return worst;
    }
  return worst;
}

}  // namespace detail

/// Exact TwIntTw(g): least k with two k-orthogonal tree-decompositions.
///
/// Refining a decomposition to the maximal cliques of its bag completion never grows a
/// bag intersection, so it suffices to pair clique trees of chordal completions; every
/// completion arises as the fill-in graph of some elimination ordering.
inline OrthogonalPair twintw_exact(const Graph& g, const Options& opt = {}) {
  check_cap("twintw_exact", g, twintw_cap, opt);
  const int n = g.order();
  if (n == 0) return {0, {0, {}, {}}, {0, {}, {}}};
  auto adj = adjacency_masks(g);
  std::map<std::vector<Mask>, std::vector<Vertex>> families;  // clique family -> an ordering
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  do families.try_emplace(completion_cliques(adj, order), order);
  while (std::next_permutation(order.begin(), order.end()));

  const int lower = clique_number(g);
  std::vector<const std::pair<const std::vector<Mask>, std::vector<Vertex>>*> list;
  for (const auto& entry : families) list.push_back(&entry);
  int best = n + 1;
  std::size_t bi = 0, bj = 0;
  for (std::size_t i = 0; i < list.size() && best > lower; ++i)
    for (std::size_t j = i; j < list.size() && best > lower; ++j) {
      int value = detail::family_orthogonality(list[i]->first, list[j]->first, best);
      if (value < best) best = value, bi = i, bj = j;
    }
  return {best, simplify(elimination_tree_decomposition(g, list[bi]->second)),
          simplify(elimination_tree_decomposition(g, list[bj]->second))};
}

/// All set partitions of 0..n-1 as restricted growth strings, in lexicographic order.
inline std::vector<std::vector<int>> set_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> labels(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int i, int used) -> void {
    if (i == n) {
      out.push_back(labels);
      return;
    }
    for (int l = 0; l <= used && l < n; ++l) {
      labels[i] = l;
      self(self, i + 1, std::max(used, l + 1));
    }
  };
  rec(rec, 0, 0);
  return out;
}

struct PartitionPair {
  int value = 0;
  VertexPartition first;
  VertexPartition second;
};

/// Exact least k with g contained in H1 x H2 x K_c and tw(H_i) <= k.
/// Factors are taken to be the quotients g/P1, g/P2 of partitions whose pairwise part
/// intersections have at most c vertices; any host factor contains such a quotient.
inline PartitionPair twtw_exact(const Graph& g, int c = 1, const Options& opt = {}) {
  check_cap("twtw_exact", g, twtw_cap, opt);
  if (c < 1) throw precondition_error("twtw_exact: c must be at least 1");
  const int n = g.order();
  auto partitions = set_partitions(n);
  const std::size_t count = partitions.size();
  std::vector<int> width(count);
  std::vector<std::uint64_t> same_part(count, 0);
  for (std::size_t i = 0; i < count; ++i) {
    auto p = VertexPartition::from_labels(partitions[i]);
    width[i] = treewidth_exact(quotient(g, p)).value;
    int bitpos = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v, ++bitpos)
        if (partitions[i][u] == partitions[i][v]) same_part[i] |= std::uint64_t{1} << bitpos;
  }
  auto compatible = [&](std::size_t a, std::size_t b) {
    if (c == 1) return (same_part[a] & same_part[b]) == 0;
    std::vector<int> cell(static_cast<std::size_t>(n * n), 0);
    for (int v = 0; v < n; ++v)
      if (++cell[partitions[a][v] * n + partitions[b][v]] > c) return false;
    return true;
  };
  std::vector<std::size_t> by_width(count);
  std::iota(by_width.begin(), by_width.end(), 0);
  std::stable_sort(by_width.begin(), by_width.end(), [&](auto a, auto b) { return width[a] < width[b]; });

  for (int k = n == 0 ? -1 : 0; k < n; ++k) {
    for (std::size_t a : by_width) {
      if (width[a] > k) break;
      for (std::size_t b : by_width) {
        if (width[b] > k) break;
        if (compatible(a, b))
          return {k, VertexPartition::from_labels(partitions[a]), VertexPartition::from_labels(partitions[b])};
      }
    }
  }
  return {-1, {}, {}};  // unreachable: singleton partitions pair with anything
}

// ---------------------------------------------------------------------------
// Raw enumeration, independent of elimination orderings. Intended for n <= 4.

/// True iff the bag family admits a tree making it a tree-decomposition shape:
/// a maximum-weight spanning tree of the intersection graph attains sum_v (count_v - 1).
inline bool admits_join_tree(const std::vector<Mask>& bags) {
  const std::size_t k = bags.size();
  if (k == 0) return true;
  int target = 0;
  for (int v = 0; v < 32; ++v) {
    int count = 0;
    for (Mask b : bags) count += (b >> v) & 1;
    if (count) target += count - 1;
  }
  std::vector<char> in_tree(k, 0);
  std::vector<int> key(k, -1);
  key[0] = 0;
  int total = 0;
  for (std::size_t step = 0; step < k; ++step) {
    std::size_t pick = k;
    for (std::size_t i = 0; i < k; ++i)
      if (!in_tree[i] && (pick == k || key[i] > key[pick])) pick = i;
    in_tree[pick] = 1;
    total += std::max(key[pick], 0);
    for (std::size_t i = 0; i < k; ++i)
      if (!in_tree[i]) key[i] = std::max(key[i], popcount(bags[i] & bags[pick]));
  }
  return total == target;
}

/// Every antichain of non-empty vertex sets that is the bag family of a tree-decomposition of g.
inline std::vector<std::vector<Mask>> raw_decomposition_families(const Graph& g) {
  const int n = g.order();
  if (n > 5) throw instance_too_large("raw_decomposition_families", n, 5);
  auto edges = g.edges();
  std::vector<std::vector<Mask>> out;
  std::vector<Mask> current;
  const Mask all = full_mask(n);
  auto rec = [&](auto&& self, Mask next) -> void {
    if (next > all) {
      Mask covered = 0;
      for (Mask b : current) covered |= b;
      if (covered != all) return;
      for (auto [u, v] : edges) {
        bool ok = false;
        for (Mask b : current) ok = ok || ((b >> u & 1) && (b >> v & 1));
        if (!ok) return;
      }
      if (admits_join_tree(current)) out.push_back(current);
      return;
    }
    self(self, next + 1);
    for (Mask b : current)
      if ((b & next) == b || (b & next) == next) return;
    current.push_back(next);
    self(self, next + 1);
    current.pop_back();
  };
  if (n == 0) return {{}};
  rec(rec, 1);
  return out;
}

inline int twintw_raw(const Graph& g) {
  auto families = raw_decomposition_families(g);
  int best = g.order();
  for (const auto& a : families)
    for (const auto& b : families) best = std::min(best, detail::family_orthogonality(a, b, best));
  return best;
}

/// twtw by explicit host enumeration: every injective map into [n] x [n], with the
/// least factor graphs that make it an embedding.
inline int twtw_raw(const Graph& g) {
  const int n = g.order();
  if (n > 4) throw instance_too_large("twtw_raw", n, 4);
  if (n == 0) return -1;
  auto edges = g.edges();
  std::vector<int> x(static_cast<std::size_t>(n)), y(static_cast<std::size_t>(n));
  std::set<int> used;
  int best = n;
  auto rec = [&](auto&& self, int v) -> void {
    if (v == n) {
      std::vector<Edge> e1, e2;
      for (auto [a, b] : edges) {
        if (x[a] != x[b]) e1.emplace_back(x[a], x[b]);
        if (y[a] != y[b]) e2.emplace_back(y[a], y[b]);
      }
      int w = std::max(treewidth_exact(Graph(n, e1)).value, treewidth_exact(Graph(n, e2)).value);
      best = std::min(best, w);
      return;
    }
    for (int cell = 0; cell < n * n; ++cell) {
      if (used.count(cell)) continue;
      used.insert(cell);
      x[v] = cell / n;
      y[v] = cell % n;
      self(self, v + 1);
      used.erase(cell);
    }
  };
  rec(rec, 0);
  return best;
}

}  // namespace prodstruct::exact
