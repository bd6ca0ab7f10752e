#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "prodstruct/containment.hpp"
#include "prodstruct/decomposition.hpp"
#include "prodstruct/decomposition_ops.hpp"
#include "prodstruct/embedding.hpp"
#include "prodstruct/families.hpp"
#include "prodstruct/planar.hpp"
#include "prodstruct/products.hpp"
#include "prodstruct/rng.hpp"

namespace prodstruct {

// ---------------------------------------------------------------------------
// Triangulated grids

enum class Diagonal : std::uint8_t {
  ne_sw,  // (r, c+1)-(r+1, c)
  nw_se,  // (r, c)-(r+1, c+1)
};

struct HexGraph {
  Graph graph;
  PathDecomposition decomposition;             // bags are consecutive column pairs
  std::vector<std::vector<Vertex>> bag_orders;
  std::vector<int> spans;
};

/// n x n grid with one diagonal per cell; vertex (r, c) has id r*n + c, and cell (r, c)
/// uses diagonals[r*(n-1) + c] (all ne_sw when empty).
inline HexGraph hex(int n, std::vector<Diagonal> diagonals = {}) {
  if (n < 2) throw precondition_error("hex: n must be at least 2");
  const int cells = (n - 1) * (n - 1);
  if (diagonals.empty()) diagonals.assign(static_cast<std::size_t>(cells), Diagonal::ne_sw);
  if (static_cast<int>(diagonals.size()) != cells) throw precondition_error("hex: need one diagonal per cell");
  auto id = [n](int r, int c) { return r * n + c; };
  auto cell = [&](int r, int c) { return diagonals[r * (n - 1) + c]; };
  std::vector<Edge> edges = grid2(n, n).edges();
  for (int r = 0; r + 1 < n; ++r)
    for (int c = 0; c + 1 < n; ++c) {
      if (cell(r, c) == Diagonal::ne_sw) edges.emplace_back(id(r, c + 1), id(r + 1, c));
      else edges.emplace_back(id(r, c), id(r + 1, c + 1));
    }
  HexGraph out{Graph(n * n, edges), {n * n, {}}, {}, {}};
  for (int c = 0; c + 1 < n; ++c) {
    // Rows top to bottom; within a row, the orientation of the cell below (above, on the last row).
    std::vector<Vertex> order;
    for (int r = 0; r < n; ++r) {
      Diagonal d = cell(r + 1 < n ? r : r - 1, c);
      if (d == Diagonal::ne_sw) order.insert(order.end(), {id(r, c), id(r, c + 1)});
      else order.insert(order.end(), {id(r, c + 1), id(r, c)});
    }
    out.decomposition.bags.push_back(sorted_bag(order));
    out.spans.push_back(ordering_span(out.graph, order));
    out.bag_orders.push_back(std::move(order));
  }
  return out;
}

/// Decides the diagonal of the square spanned by factor edges e1 = xx' and e2 = yy'
/// (both with the smaller endpoint first): true adds (x,y)(x',y'), false adds (x,y')(x',y).
using DiagonalRule = std::function<bool(Edge, Edge)>;

/// G1 □ G2 with one diagonal per square; vertex (x, y) has id x*|V(G2)| + y.
inline Graph triangulated_grid2(const Graph& g1, const Graph& g2, const DiagonalRule& rule = {}) {
  const int n2 = g2.order();
  std::vector<Edge> edges = cartesian(g1, g2).edges();
  for (auto e1 : g1.edges())
    for (auto e2 : g2.edges()) {
      auto [x, x2] = e1;
      auto [y, y2] = e2;
      if (!rule || rule(e1, e2)) edges.emplace_back(x * n2 + y, x2 * n2 + y2);
      else edges.emplace_back(x * n2 + y2, x2 * n2 + y);
    }
  return Graph(g1.order() * n2, edges);
}

/// As DiagonalRule, for the slice orthogonal to `axis` (0, 1 or 2) at coordinate `level`.
using SliceDiagonalRule = std::function<bool(int axis, int level, Edge, Edge)>;

/// P_a □ P_b □ P_c with every axis-parallel slice triangulated; (i, j, k) has id (i*b + j)*c + k.
inline Graph triangulated_grid3(int a, int b, int c, const SliceDiagonalRule& rule = {}) {
  const std::array<int, 3> dims{a, b, c};
  auto id = [&](std::array<int, 3> p) { return (p[0] * b + p[1]) * c + p[2]; };
  std::vector<Edge> edges = grid3(a, b, c).edges();
  for (int axis = 0; axis < 3; ++axis) {
    int s = axis == 0 ? 1 : 0, t = axis == 2 ? 1 : 2;
    for (int level = 0; level < dims[axis]; ++level)
      for (int u = 0; u + 1 < dims[s]; ++u)
        for (int v = 0; v + 1 < dims[t]; ++v) {
          std::array<int, 3> p{}, q{};
          p[axis] = q[axis] = level;
          bool main = !rule || rule(axis, level, {u, u + 1}, {v, v + 1});
          p[s] = u, q[s] = u + 1;
          p[t] = main ? v : v + 1;
          q[t] = main ? v + 1 : v;
          edges.emplace_back(id(p), id(q));
        }
  }
  return Graph(a * b * c, edges);
}

// ---------------------------------------------------------------------------
// Extremal families

/// (P_n □ P_n) + K_1; the dominant vertex has id n*n.
inline Graph pyramid(int n) { return apex(grid2(n, n)); }

/// Apex over k disjoint edges (2i, 2i+1); the apex has id 2k.
inline Graph windmill(int k) {
  Graph matching(0);
  for (int i = 0; i < k; ++i) matching = disjoint_union(matching, path(2));
  return apex(matching);
}

/// Apex over k disjoint triangles (3i, 3i+1, 3i+2); the apex has id 3k.
inline Graph flower(int k) {
  Graph triangles(0);
  for (int i = 0; i < k; ++i) triangles = disjoint_union(triangles, complete(3));
  return apex(triangles);
}

struct TreedepthFamily {
  Graph graph;
  std::vector<int> parent;  // elimination forest of depth k + 1 (-1 at the root)
};

/// G_0 = K_1; G_i adds, for each i-clique C of G_{i-1} in lexicographic order,
/// i*i*c + 1 new vertices adjacent to exactly C. New vertices hang below the
/// last-added vertex of C in the elimination forest.
inline TreedepthFamily treedepth_family(int k, int c) {
  if (k < 0 || c < 1) throw precondition_error("treedepth_family: need k >= 0 and c >= 1");
  if (k > 2 || c > 2) throw instance_too_large("treedepth_family", k > 2 ? k : c, 2);
  std::vector<Edge> edges;
  std::vector<int> parent{-1};
  int n = 1;
  for (int i = 1; i <= k; ++i) {
    Graph prev(n, edges);
    std::vector<std::vector<Vertex>> cliques;
    std::vector<Vertex> current;
    auto rec = [&](auto&& self, Vertex from) -> void {
      if (static_cast<int>(current.size()) == i) {
        cliques.push_back(current);
        return;
      }
      for (Vertex v = from; v < n; ++v) {
        bool ok = true;
        for (Vertex u : current) ok = ok && prev.adjacent(u, v);
        if (!ok) continue;
        current.push_back(v);
        self(self, v + 1);
        current.pop_back();
      }
    };
    rec(rec, 0);
    for (const auto& clique : cliques)
      for (int j = 0; j < i * i * c + 1; ++j) {
        Vertex fresh = n++;
        for (Vertex u : clique) edges.emplace_back(u, fresh);
        parent.push_back(clique.back());
      }
  }
  return {Graph(n, edges), parent};
}

/// Depth of an elimination forest whose closure contains g, or -1 if some edge joins
/// vertices that are not in an ancestor relation.
inline int elimination_forest_depth(const Graph& g, const std::vector<int>& parent) {
  const int n = g.order();
  if (static_cast<int>(parent.size()) != n) return -1;
  std::vector<int> depth(static_cast<std::size_t>(n), 0);
  int best = 0;
  for (Vertex v = 0; v < n; ++v) {
    int d = 0;
    for (int u = v; u != -1; u = parent[u])
      if (++d > n) return -1;
    depth[v] = d;
    best = std::max(best, d);
  }
  auto is_ancestor = [&](int a, int v) {
    for (int u = v; u != -1; u = parent[u])
      if (u == a) return true;
    return false;
  };
  for (auto [u, v] : g.edges())
    if (!is_ancestor(u, v) && !is_ancestor(v, u)) return -1;
  return best;
}

struct SeparatingGraph {
  Graph graph;
  TreeDecomposition witness;  // node 0 is the hub bag S; one path of bags hangs off it per pair
};

/// c+1 independent vertices 0..c; for each pair v < w a fresh c x c grid (row-major, consecutive
/// ids) complete to {v, w}. The witness attaches, per pair, the star bags of the grid plus v, w.
inline SeparatingGraph separating_graph(int c) {
  if (c < 1) throw precondition_error("separating_graph: c must be positive");
  if (c > 2) throw instance_too_large("separating_graph", c, 2);
  const int s = c + 1;
  Graph grid = grid2(c, c);
  std::vector<Vertex> even;
  for (Vertex v = 0; v < grid.order(); ++v)
    if ((v / c + v % c) % 2 == 0) even.push_back(v);
  PathDecomposition stars = bipartite_star_decomposition(grid, even);

  std::vector<Edge> edges;
  SeparatingGraph out{Graph(), {0, {}, {}}};
  Bag hub(static_cast<std::size_t>(s));
  for (int i = 0; i < s; ++i) hub[i] = i;
  out.witness.bags.push_back(hub);
  int n = s;
  for (int v = 0; v < s; ++v)
    for (int w = v + 1; w < s; ++w) {
      const int offset = n;
      for (auto [a, b] : grid.edges()) edges.emplace_back(a + offset, b + offset);
      for (int x = 0; x < grid.order(); ++x) {
        edges.emplace_back(v, x + offset);
        edges.emplace_back(w, x + offset);
      }
      int previous = 0;
      for (const auto& bag : stars.bags) {
        Bag b{v, w};
        for (Vertex x : bag) b.push_back(x + offset);
        out.witness.tree_edges.emplace_back(previous, out.witness.nodes());
        previous = out.witness.nodes();
        out.witness.bags.push_back(sorted_bag(b));
      }
      n += grid.order();
    }
  out.graph = Graph(n, edges);
  out.witness.host_n = n;
  out.witness.normalize();
  return out;
}

// ---------------------------------------------------------------------------
// Random inputs

/// Starts from K_3 with outer face (0, 1, 2) and inserts n-3 vertices, each into a uniformly
/// random inner face (faces in discovery order), joined to its three corners.
inline PlaneTriangulation stacked_triangulation(int n, std::uint64_t seed) {
  if (n < 3) throw precondition_error("stacked_triangulation: n must be at least 3");
  SplitMix64 rng(seed);
  std::vector<std::vector<Vertex>> rot = {{1, 2}, {2, 0}, {0, 1}};
  std::vector<Edge> edges = {{0, 1}, {1, 2}, {0, 2}};
  const Face outer{0, 1, 2};
  auto insert_after = [](std::vector<Vertex>& r, Vertex after, Vertex x) {
    r.insert(std::find(r.begin(), r.end(), after) + 1, x);
  };
  for (int x = 3; x < n; ++x) {
    PlaneTriangulation current{Graph(x, edges), rot, outer};
    auto fs = faces(current);
    std::erase_if(fs, [&](const Face& f) { return same_face(f, outer); });
    auto [a, b, c] = fs[rng.below(fs.size())];
    // Face a->b->c: c follows a around b, a follows b around c, b follows c around a.
    insert_after(rot[b], a, x);
    insert_after(rot[c], b, x);
    insert_after(rot[a], c, x);
    rot.push_back({a, c, b});
    edges.insert(edges.end(), {{a, x}, {b, x}, {c, x}});
  }
  return {Graph(n, edges), rot, outer};
}

/// Uniform-ish simple d-regular graph: stubs are paired one random suitable pair at a time
/// (no loops or repeated edges); a dead end restarts the pairing.
inline Graph random_regular(int n, int d, std::uint64_t seed) {
  if (n < 1 || d < 0 || d >= n) throw precondition_error("random_regular: need 0 <= d < n");
  if ((static_cast<long>(n) * d) % 2 != 0) throw precondition_error("random_regular: n*d must be even");
  SplitMix64 rng(seed);
  while (true) {
    std::vector<Vertex> stubs;
    for (Vertex v = 0; v < n; ++v) stubs.insert(stubs.end(), d, v);
    std::vector<std::vector<char>> adj(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
    std::vector<Edge> edges;
    bool stuck = false;
    while (!stubs.empty() && !stuck) {
      bool paired = false;
      for (int attempt = 0; attempt < 64 && !paired; ++attempt) {
        std::size_t i = rng.below(stubs.size()), j = rng.below(stubs.size());
        Vertex u = stubs[i], v = stubs[j];
        if (i == j || u == v || adj[u][v]) continue;
        adj[u][v] = adj[v][u] = 1;
        edges.emplace_back(u, v);
        if (i < j) std::swap(i, j);
        stubs.erase(stubs.begin() + static_cast<std::ptrdiff_t>(i));
        stubs.erase(stubs.begin() + static_cast<std::ptrdiff_t>(j));
        paired = true;
      }
      if (paired) continue;
      stuck = true;
      for (std::size_t i = 0; i < stubs.size() && stuck; ++i)
        for (std::size_t j = i + 1; j < stubs.size() && stuck; ++j)
          if (stubs[i] != stubs[j] && !adj[stubs[i]][stubs[j]]) stuck = false;
    }
    if (!stuck) return Graph(n, edges);
  }
}

// ---------------------------------------------------------------------------

struct TightnessExample {
  Graph graph;                                  // K_{pq,m,m}
  Graph first;                                  // K_{p,m}: p-side ids first
  Graph second;                                 // K_{q,m}
  std::optional<ProductEmbedding> embedding;    // absent when no embedding exists
};

/// K_{pq,m,m} with factors K_{p,m} and K_{q,m}. For p = q = 1 the embedding is explicit
/// (pq-part to (hub, hub), first m-part to (leaf, hub), second to (hub, leaf)); otherwise
/// it is searched for exhaustively.
inline TightnessExample tightness_example(int p, int q, int m) {
  if (p < 1 || q < 1 || m < p * q) throw precondition_error("tightness_example: need p, q >= 1 and m >= pq");
  TightnessExample out{complete_multipartite({p * q, m, m}), complete_bipartite(p, m), complete_bipartite(q, m), {}};
  if (p == 1 && q == 1) {
    ProductEmbedding e{{out.first, out.second}, std::nullopt, {{0, 0}}};
    for (int k = 0; k < m; ++k) e.map.push_back({1 + k, 0});
    for (int l = 0; l < m; ++l) e.map.push_back({0, 1 + l});
    out.embedding = std::move(e);
    return out;
  }
  const int n2 = out.second.order();
  if (auto phi = subgraph_contained(out.graph, strong(out.first, out.second))) {
    ProductEmbedding e{{out.first, out.second}, std::nullopt, {}};
    for (Vertex x : *phi) e.map.push_back({x / n2, x % n2});
    out.embedding = std::move(e);
  }
  return out;
}

}  // namespace prodstruct
