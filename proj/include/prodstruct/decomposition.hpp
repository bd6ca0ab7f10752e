#pragma once

#include <algorithm>
#include <iterator>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "prodstruct/graph.hpp"

namespace prodstruct {

using Bag = std::vector<Vertex>;

/// Tree-indexed family of bags over a host with host_n vertices.
/// Node x has bag bags[x]; empty bags are allowed.
struct TreeDecomposition {
  int host_n = 0;
  std::vector<Bag> bags;
  std::vector<std::pair<int, int>> tree_edges;

  int nodes() const noexcept { return static_cast<int>(bags.size()); }

  /// Sorts every bag and every tree edge; idempotent.
  TreeDecomposition& normalize() {
    for (auto& b : bags) {
      std::sort(b.begin(), b.end());
      b.erase(std::unique(b.begin(), b.end()), b.end());
    }
    for (auto& [x, y] : tree_edges)
      if (x > y) std::swap(x, y);
    std::sort(tree_edges.begin(), tree_edges.end());
    return *this;
  }

  std::vector<std::vector<int>> tree_adjacency() const {
    std::vector<std::vector<int>> adj(bags.size());
    for (auto [x, y] : tree_edges) {
      adj.at(x).push_back(y);
      adj.at(y).push_back(x);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    return adj;
  }

  friend bool operator==(const TreeDecomposition&, const TreeDecomposition&) = default;
};

struct PathDecomposition {
  int host_n = 0;
  std::vector<Bag> bags;

  TreeDecomposition to_tree() const {
    TreeDecomposition td{host_n, bags, {}};
    for (int i = 0; i + 1 < static_cast<int>(bags.size()); ++i) td.tree_edges.emplace_back(i, i + 1);
    return td.normalize();
  }

  friend bool operator==(const PathDecomposition&, const PathDecomposition&) = default;
};

inline Bag sorted_bag(Bag b) {
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  return b;
}

inline Bag bag_intersection(const Bag& a, const Bag& b) {
  Bag out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline Bag bag_union(const Bag& a, const Bag& b) {
  Bag out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline bool bag_contains(const Bag& outer, const Bag& inner) {
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

inline int intersection_size(const Bag& a, const Bag& b) {
  int count = 0;
  auto i = a.begin(), j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) ++i;
    else if (*j < *i) ++j;
    else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

struct DecompositionReport {
  bool valid = false;
  int width = -1;
  int adhesion = 0;
  bool taut = false;
  std::string violation;

  explicit operator bool() const noexcept { return valid; }
};

/// Checks the tree shape and the three decomposition axioms against g.
/// Bags need not be sorted on input.
inline DecompositionReport validate(const Graph& g, const TreeDecomposition& td_in) {
  DecompositionReport r;
  auto fail = [&](std::string why) {
    r.valid = false;
    r.violation = std::move(why);
    return r;
  };
  if (td_in.host_n != g.order())
    return fail("decomposition host has " + std::to_string(td_in.host_n) + " vertices, graph has " +
                std::to_string(g.order()));
  TreeDecomposition td = td_in;
  td.normalize();
  const int nodes = td.nodes();
  for (int x = 0; x < nodes; ++x) {
    if (td.bags[x].size() != td_in.bags[x].size())
      return fail("bag " + std::to_string(x) + " repeats a vertex");
    for (Vertex v : td.bags[x])
      if (v < 0 || v >= g.order())
        return fail("bag " + std::to_string(x) + " holds out-of-range vertex " + std::to_string(v));
  }

  // Indexing tree.
  if (nodes == 0) {
    if (g.order() > 0) return fail("vertex 0 is in no bag");
  } else {
    if (static_cast<int>(td.tree_edges.size()) != nodes - 1)
      return fail("indexing tree has " + std::to_string(td.tree_edges.size()) + " edges for " +
                  std::to_string(nodes) + " nodes");
    std::vector<int> root(static_cast<std::size_t>(nodes));
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](int x) {
      while (root[x] != x) x = root[x] = root[root[x]];
      return x;
    };
    for (auto [x, y] : td.tree_edges) {
      if (x < 0 || y >= nodes || x == y) return fail("tree edge out of range or a loop");
      int a = find(x), b = find(y);
      if (a == b)
        return fail("indexing graph has a cycle through edge " + std::to_string(x) + "-" + std::to_string(y));
      root[a] = b;
    }
  }

  // Vertex and edge coverage.
  std::vector<std::vector<int>> holders(static_cast<std::size_t>(g.order()));
  for (int x = 0; x < nodes; ++x)
    for (Vertex v : td.bags[x]) holders[v].push_back(x);
  for (Vertex v = 0; v < g.order(); ++v)
    if (holders[v].empty()) return fail("vertex " + std::to_string(v) + " is in no bag");
  for (auto [u, v] : g.edges()) {
    bool covered = false;
    for (int x : holders[u])
      if (std::binary_search(td.bags[x].begin(), td.bags[x].end(), v)) {
        covered = true;
        break;
      }
    if (!covered) return fail("edge " + std::to_string(u) + "-" + std::to_string(v) + " is in no bag");
  }

  // Each vertex's nodes induce a subtree: k nodes of a forest span k-1 edges iff connected.
  std::vector<int> inside_edges(static_cast<std::size_t>(g.order()), 0);
  for (auto [x, y] : td.tree_edges)
    for (Vertex v : bag_intersection(td.bags[x], td.bags[y])) ++inside_edges[v];
  for (Vertex v = 0; v < g.order(); ++v)
    if (inside_edges[v] != static_cast<int>(holders[v].size()) - 1)
      return fail("nodes containing vertex " + std::to_string(v) + " are disconnected in the tree");

  r.valid = true;
  r.taut = true;
  for (const auto& b : td.bags) r.width = std::max(r.width, static_cast<int>(b.size()) - 1);
  for (auto [x, y] : td.tree_edges) {
    Bag common = bag_intersection(td.bags[x], td.bags[y]);
    r.adhesion = std::max(r.adhesion, static_cast<int>(common.size()));
    if (r.taut && !is_clique(g, common)) r.taut = false;
  }
  return r;
}

inline DecompositionReport validate(const Graph& g, const PathDecomposition& pd) {
  return validate(g, pd.to_tree());
}

/// Throws invalid_decomposition unless td is a valid tree-decomposition of g.
template <class Decomposition>
DecompositionReport require_valid(const Graph& g, const Decomposition& d, const std::string& what = "decomposition") {
  auto r = validate(g, d);
  if (!r.valid) throw invalid_decomposition(what + ": " + r.violation);
  return r;
}

/// Torso at node x; vertex i of the result is the i-th smallest vertex of B_x.
inline Graph torso(const Graph& g, const TreeDecomposition& td, int x) {
  require_valid(g, td);
  Bag bag = sorted_bag(td.bags.at(x));
  std::vector<Edge> edges = induced_subgraph(g, bag).edges();
  auto local = [&](Vertex v) {
    return static_cast<int>(std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
  };
  const auto adj = td.tree_adjacency();
  for (int y : adj.at(x)) {
    Bag common = bag_intersection(bag, sorted_bag(td.bags[y]));
    for (std::size_t i = 0; i < common.size(); ++i)
      for (std::size_t j = i + 1; j < common.size(); ++j) edges.emplace_back(local(common[i]), local(common[j]));
  }
  return Graph(static_cast<int>(bag.size()), edges);
}

/// Largest |B_x cap C_y| over all bag pairs.
inline int orthogonality(const TreeDecomposition& a, const TreeDecomposition& b) {
  if (a.host_n != b.host_n)
    throw precondition_error("orthogonality: host sizes differ (" + std::to_string(a.host_n) + " vs " +
                             std::to_string(b.host_n) + ")");
  std::vector<Bag> left, right;
  for (const auto& x : a.bags) left.push_back(sorted_bag(x));
  for (const auto& y : b.bags) right.push_back(sorted_bag(y));
  int best = 0;
  for (const auto& x : left)
    for (const auto& y : right) best = std::max(best, intersection_size(x, y));
  return best;
}

inline int orthogonality(const TreeDecomposition& a, const PathDecomposition& b) {
  return orthogonality(a, b.to_tree());
}
inline int orthogonality(const PathDecomposition& a, const PathDecomposition& b) {
  return orthogonality(a.to_tree(), b.to_tree());
}

/// The family (B_x cap C_y : y) as a decomposition of g[B_x], in local ids of sorted B_x.
inline TreeDecomposition restrict_to_bag(const TreeDecomposition& td, const Bag& bag_in) {
  Bag bag = sorted_bag(bag_in);
  TreeDecomposition out{static_cast<int>(bag.size()), {}, td.tree_edges};
  for (const auto& c : td.bags) {
    Bag local;
    for (Vertex v : bag_intersection(bag, sorted_bag(c)))
      local.push_back(static_cast<int>(std::lower_bound(bag.begin(), bag.end(), v) - bag.begin()));
    out.bags.push_back(std::move(local));
  }
  return out.normalize();
}

/// Contracts tree edges whose one bag is contained in the other, keeping the larger bag.
inline TreeDecomposition simplify(const TreeDecomposition& td_in) {
  TreeDecomposition td = td_in;
  td.normalize();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t e = 0; e < td.tree_edges.size(); ++e) {
      auto [x, y] = td.tree_edges[e];
      int keep, drop;
      if (bag_contains(td.bags[x], td.bags[y])) keep = x, drop = y;
      else if (bag_contains(td.bags[y], td.bags[x])) keep = y, drop = x;
      else continue;
      td.tree_edges.erase(td.tree_edges.begin() + static_cast<std::ptrdiff_t>(e));
      for (auto& [a, b] : td.tree_edges) {
        if (a == drop) a = keep;
        if (b == drop) b = keep;
      }
      td.bags.erase(td.bags.begin() + drop);
      for (auto& [a, b] : td.tree_edges) {
        if (a > drop) --a;
        if (b > drop) --b;
      }
      td.normalize();
      changed = true;
      break;
    }
  }
  return td;
}

/// Node removal order used by the gluing inductions: repeatedly remove the lowest-id
/// leaf; each step records (leaf, its neighbour at removal time). `base` is the last node.
struct LeafOrder {
  int base = 0;
  std::vector<std::pair<int, int>> removed;
};

inline LeafOrder leaf_removal_order(const TreeDecomposition& td) {
  const int n = td.nodes();
  auto adj = td.tree_adjacency();
  std::vector<int> degree(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) degree[x] = static_cast<int>(adj[x].size());
  std::vector<char> gone(static_cast<std::size_t>(n), 0);
  LeafOrder order;
  for (int step = 0; step + 1 < n; ++step) {
    int leaf = 0;
    while (gone[leaf] || degree[leaf] != 1) ++leaf;
    int nb = -1;
    for (int y : adj[leaf])
      if (!gone[y]) nb = y;
    gone[leaf] = 1;
    --degree[nb];
    order.removed.emplace_back(leaf, nb);
  }
  for (int x = 0; x < n; ++x)
    if (!gone[x]) order.base = x;
  return order;
}

/// Largest distance in `order` between the ends of an edge of g inside the ordered set.
inline int ordering_span(const Graph& g, const std::vector<Vertex>& order) {
  std::vector<int> pos(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < order.size(); ++i) pos.at(order[i]) = static_cast<int>(i);
  int span = 0;
  for (Vertex u : order)
    for (Vertex v : g.neighbors(u))
      if (pos[v] > pos[u]) span = std::max(span, pos[v] - pos[u]);
  return span;
}

}  // namespace prodstruct
