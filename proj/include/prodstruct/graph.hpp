#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "prodstruct/error.hpp"

namespace prodstruct {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;
using Arc = std::pair<Vertex, Vertex>;  // (tail, head)

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
/// Duplicate edges are collapsed on construction; self-loops are rejected.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(static_cast<std::size_t>(check_order(n))) {}

  Graph(int n, std::span<const Edge> edges) : Graph(n) {
    for (auto [u, v] : edges) {
      check_vertex(u);
      check_vertex(v);
      if (u == v) throw precondition_error("self-loop at vertex " + std::to_string(u));
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    for (auto& nb : adj_) {
      std::sort(nb.begin(), nb.end());
      nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
  }

  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const noexcept { return static_cast<int>(adj_.size()); }

  std::size_t size() const noexcept {
    std::size_t total = 0;
    for (const auto& nb : adj_) total += nb.size();
    return total / 2;
  }

  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adj_.at(v).size()); }

  bool adjacent(Vertex u, Vertex v) const {
    const auto& nb = adj_.at(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  int max_degree() const noexcept {
    int d = 0;
    for (const auto& nb : adj_) d = std::max(d, static_cast<int>(nb.size()));
    return d;
  }

  int min_degree() const noexcept {
    if (adj_.empty()) return 0;
    int d = order();
    for (const auto& nb : adj_) d = std::min(d, static_cast<int>(nb.size()));
    return d;
  }

  /// Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < order(); ++u)
      for (Vertex v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  static int check_order(int n) {
    if (n < 0) throw precondition_error("negative vertex count");
    return n;
  }
  void check_vertex(Vertex v) const {
    if (v < 0 || v >= order())
      throw precondition_error("vertex " + std::to_string(v) + " out of range");
  }

  std::vector<std::vector<Vertex>> adj_;
};

/// Digraph on 0..n-1; antiparallel arcs uv and vu may both be present.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n) : out_(static_cast<std::size_t>(n)), indeg_(static_cast<std::size_t>(n)) {
    if (n < 0) throw precondition_error("negative vertex count");
  }

  Digraph(int n, std::span<const Arc> arcs) : Digraph(n) {
    for (auto [t, h] : arcs) {
      if (t < 0 || t >= n || h < 0 || h >= n)
        throw precondition_error("arc endpoint out of range");
      if (t == h) throw precondition_error("self-loop at vertex " + std::to_string(t));
      out_[t].push_back(h);
    }
    for (auto& nb : out_) {
      std::sort(nb.begin(), nb.end());
      nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
      for (Vertex h : nb) ++indeg_[h];
    }
  }

  Digraph(int n, std::initializer_list<Arc> arcs)
      : Digraph(n, std::span<const Arc>(arcs.begin(), arcs.size())) {}

  int order() const noexcept { return static_cast<int>(out_.size()); }

  std::size_t arc_count() const noexcept {
    std::size_t total = 0;
    for (const auto& nb : out_) total += nb.size();
    return total;
  }

  const std::vector<Vertex>& out_neighbors(Vertex v) const { return out_.at(v); }

  bool has_arc(Vertex tail, Vertex head) const {
    const auto& nb = out_.at(tail);
    return std::binary_search(nb.begin(), nb.end(), head);
  }

  int indegree(Vertex v) const { return indeg_.at(v); }

  int max_indegree() const noexcept {
    int d = 0;
    for (int x : indeg_) d = std::max(d, x);
    return d;
  }

  std::vector<Arc> arcs() const {
    std::vector<Arc> out;
    for (Vertex t = 0; t < order(); ++t)
      for (Vertex h : out_[t]) out.emplace_back(t, h);
    return out;
  }

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  std::vector<std::vector<Vertex>> out_;
  std::vector<int> indeg_;
};

/// Partition of 0..n-1 into disjoint non-empty parts.
class VertexPartition {
 public:
  VertexPartition() = default;

  VertexPartition(int n, std::vector<std::vector<Vertex>> parts)
      : parts_(std::move(parts)), part_of_(static_cast<std::size_t>(n), -1) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      auto& part = parts_[i];
      if (part.empty()) throw invalid_partition("part " + std::to_string(i) + " is empty");
      std::sort(part.begin(), part.end());
      for (Vertex v : part) {
        if (v < 0 || v >= n) throw invalid_partition("vertex " + std::to_string(v) + " out of range");
        if (part_of_[v] != -1)
          throw invalid_partition("vertex " + std::to_string(v) + " lies in two parts");
        part_of_[v] = static_cast<int>(i);
      }
    }
    for (Vertex v = 0; v < n; ++v)
      if (part_of_[v] == -1) throw invalid_partition("vertex " + std::to_string(v) + " is uncovered");
  }

  /// Builds a partition from a label per vertex; parts ordered by first appearance.
  static VertexPartition from_labels(std::span<const int> labels) {
    std::vector<std::vector<Vertex>> parts;
    std::vector<int> remap;
    for (Vertex v = 0; v < static_cast<int>(labels.size()); ++v) {
      int l = labels[v];
      if (l < 0) throw invalid_partition("negative label");
      if (l >= static_cast<int>(remap.size())) remap.resize(l + 1, -1);
      if (remap[l] == -1) {
        remap[l] = static_cast<int>(parts.size());
        parts.emplace_back();
      }
      parts[remap[l]].push_back(v);
    }
    return VertexPartition(static_cast<int>(labels.size()), std::move(parts));
  }

  static VertexPartition singletons(int n) {
    std::vector<std::vector<Vertex>> parts;
    for (Vertex v = 0; v < n; ++v) parts.push_back({v});
    return VertexPartition(n, std::move(parts));
  }

  int vertex_count() const noexcept { return static_cast<int>(part_of_.size()); }
  int part_count() const noexcept { return static_cast<int>(parts_.size()); }
  const std::vector<std::vector<Vertex>>& parts() const noexcept { return parts_; }
  const std::vector<Vertex>& part(int i) const { return parts_.at(i); }
  int part_of(Vertex v) const { return part_of_.at(v); }

  friend bool operator==(const VertexPartition&, const VertexPartition&) = default;

 private:
  std::vector<std::vector<Vertex>> parts_;
  std::vector<int> part_of_;
};

// ---------------------------------------------------------------------------
// Constructors and basic queries.

/// Induced subgraph; vertex i of the result is vertices[i].
inline Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (local.at(vertices[i]) != -1) throw precondition_error("repeated vertex in induced_subgraph");
    local[vertices[i]] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (Vertex w : g.neighbors(vertices[i]))
      if (local[w] > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), local[w]);
  return Graph(static_cast<int>(vertices.size()), edges);
}

/// Disjoint union; b's vertices are shifted by a.order().
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + a.order(), v + a.order());
  return Graph(a.order() + b.order(), edges);
}

/// Complete join a + b: a's ids first, then b's shifted by a.order().
inline Graph complete_join(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = disjoint_union(a, b).edges();
  for (Vertex u = 0; u < a.order(); ++u)
    for (Vertex v = 0; v < b.order(); ++v) edges.emplace_back(u, a.order() + v);
  return Graph(a.order() + b.order(), edges);
}

/// g + K1; the dominant vertex has id g.order().
inline Graph apex(const Graph& g) { return complete_join(g, Graph(1)); }

inline bool is_clique(const Graph& g, std::span<const Vertex> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (vertices[i] == vertices[j] || !g.adjacent(vertices[i], vertices[j])) return false;
  return true;
}

inline bool is_independent(const Graph& g, std::span<const Vertex> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (g.adjacent(vertices[i], vertices[j])) return false;
  return true;
}

/// g / p: one vertex per part (in part order); distinct parts adjacent iff a cross edge exists.
inline Graph quotient(const Graph& g, const VertexPartition& p) {
  if (p.vertex_count() != g.order())
    throw invalid_partition("partition covers " + std::to_string(p.vertex_count()) +
                            " vertices, graph has " + std::to_string(g.order()));
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    int a = p.part_of(u), b = p.part_of(v);
    if (a != b) edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  return Graph(p.part_count(), edges);
}

/// Pastes g2 onto g1 by identifying c2[i] with c1[i]. Ids: g1's vertices, then the
/// vertices of g2 outside c2 in increasing order.
inline Graph clique_paste(const Graph& g1, std::span<const Vertex> c1, const Graph& g2,
                          std::span<const Vertex> c2) {
  if (c1.size() != c2.size()) throw precondition_error("clique_paste: clique sizes differ");
  if (!is_clique(g1, c1)) throw precondition_error("clique_paste: c1 is not a clique of g1");
  if (!is_clique(g2, c2)) throw precondition_error("clique_paste: c2 is not a clique of g2");
  std::vector<int> image(static_cast<std::size_t>(g2.order()), -1);
  for (std::size_t i = 0; i < c2.size(); ++i) image[c2[i]] = c1[i];
  int next = g1.order();
  for (Vertex v = 0; v < g2.order(); ++v)
    if (image[v] == -1) image[v] = next++;
  std::vector<Edge> edges = g1.edges();
  for (auto [u, v] : g2.edges()) edges.emplace_back(image[u], image[v]);
  return Graph(next, edges);
}

inline Graph underlying(const Digraph& d) {
  std::vector<Edge> edges;
  for (auto [t, h] : d.arcs()) edges.emplace_back(std::min(t, h), std::max(t, h));
  return Graph(d.order(), edges);
}

/// Every edge of g oriented both ways.
inline Digraph bidirected(const Graph& g) {
  std::vector<Arc> arcs;
  for (auto [u, v] : g.edges()) {
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  return Digraph(g.order(), arcs);
}

/// BFS distances from source; unreachable vertices get -1.
inline std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  std::queue<Vertex> q;
  dist.at(source) = 0;
  q.push(source);
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop();
    for (Vertex w : g.neighbors(u))
      if (dist[w] == -1) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
  }
  return dist;
}

/// Component label per vertex, labels numbered by smallest member.
inline std::vector<int> component_labels(const Graph& g) {
  std::vector<int> label(static_cast<std::size_t>(g.order()), -1);
  int next = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (label[s] != -1) continue;
    std::vector<Vertex> stack{s};
    label[s] = next;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u))
        if (label[w] == -1) {
          label[w] = next;
          stack.push_back(w);
        }
    }
    ++next;
  }
  return label;
}

inline bool is_connected(const Graph& g) {
  auto label = component_labels(g);
  return std::all_of(label.begin(), label.end(), [](int l) { return l == 0; });
}

/// Adjacency as bitmasks; requires order() <= 32.
inline std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
  if (g.order() > 32) throw precondition_error("adjacency_masks needs at most 32 vertices");
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(g.order()), 0);
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v : g.neighbors(u)) adj[u] |= std::uint32_t{1} << v;
  return adj;
}

/// Relabels g so that vertex v becomes perm[v].
inline Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw precondition_error("relabel: size mismatch");
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph(g.order(), edges);
}

}  // namespace prodstruct
