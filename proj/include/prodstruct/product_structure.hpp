#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "prodstruct/embedding.hpp"
#include "prodstruct/families.hpp"
#include "prodstruct/graph.hpp"
#include "prodstruct/products.hpp"

namespace prodstruct {

/// A + B + K_{pq}; ids: A, then B shifted by |A|, then r_{i,j} at |A| + |B| + i*q + j.
inline Graph join_product_guest(const Graph& a, const Graph& b, int p, int q) {
  return complete_join(complete_join(a, b), complete(p * q));
}

/// Embeds A + B + K_{pq} into (A + K_p) x (B + K_q). Apex a_i of the first factor has
/// id |A| + i, apex b_j of the second has id |B| + j.
inline ProductEmbedding embed_join_product(const Graph& a, const Graph& b, int p, int q) {
  if (p < 1 || q < 1) throw precondition_error("embed_join_product: p and q must be positive");
  const int na = a.order(), nb = b.order();
  ProductEmbedding e{{complete_join(a, complete(p)), complete_join(b, complete(q))}, std::nullopt, {}};
  for (int x = 0; x < na; ++x) e.map.push_back({x, nb});
  for (int y = 0; y < nb; ++y) e.map.push_back({na, y});
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j) e.map.push_back({na + i, nb + j});
  return e;
}

/// (A x B) + K_{pq}; ids: A x B row-major, then r_{i,j} at |A||B| + i*q + j.
inline Graph move_apex_guest(const Graph& a, const Graph& b, int p, int q) {
  return complete_join(strong(a, b), complete(p * q));
}

/// Embeds (A x B) + K_{pq} into (A + K_p) x (B + K_q): identity on A x B, r_{i,j} -> (a_i, b_j).
inline ProductEmbedding embed_move_apex(const Graph& a, const Graph& b, int p, int q) {
  if (p < 1 || q < 1) throw precondition_error("embed_move_apex: p and q must be positive");
  const int na = a.order(), nb = b.order();
  ProductEmbedding e{{complete_join(a, complete(p)), complete_join(b, complete(q))}, std::nullopt, {}};
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < nb; ++y) e.map.push_back({x, y});
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j) e.map.push_back({na + i, nb + j});
  return e;
}

/// Embeds g (or apex(g), whose extra vertex is id n) into apex(g[V1]) x apex(g[V2]).
/// Factor vertex i is the i-th smallest vertex of its side; the apex is last.
inline ProductEmbedding embed_apex_partition(const Graph& g, const std::vector<Vertex>& v1_in,
                                             bool include_apex = false) {
  const int n = g.order();
  std::vector<int> side(static_cast<std::size_t>(n), 1);
  for (Vertex v : v1_in) {
    if (v < 0 || v >= n) throw precondition_error("embed_apex_partition: vertex out of range");
    side[v] = 0;
  }
  std::vector<Vertex> v1, v2;
  for (Vertex v = 0; v < n; ++v) (side[v] == 0 ? v1 : v2).push_back(v);
  Graph f1 = apex(induced_subgraph(g, v1)), f2 = apex(induced_subgraph(g, v2));
  const int apex1 = static_cast<int>(v1.size()), apex2 = static_cast<int>(v2.size());
  ProductEmbedding e{{f1, f2}, std::nullopt, {}};
  int i1 = 0, i2 = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (side[v] == 0) e.map.push_back({i1++, apex2});
    else e.map.push_back({apex1, i2++});
  }
  if (include_apex) e.map.push_back({apex1, apex2});
  return e;
}

struct PartitionCheck {
  std::optional<ProductEmbedding> embedding;
  std::optional<std::pair<int, int>> violation;  // (part of p1, part of p2) with > c common vertices
};

/// Embeds g into (g/p1) x (g/p2) x K_c when every |A1 ∩ A2| <= c; members of an
/// intersection get third coordinates 0, 1, ... in increasing vertex id.
inline PartitionCheck partition_product_check(const Graph& g, const VertexPartition& p1,
                                              const VertexPartition& p2, int c) {
  if (c < 1) throw precondition_error("partition_product_check: c must be positive");
  if (p1.vertex_count() != g.order() || p2.vertex_count() != g.order())
    throw invalid_partition("partition does not cover the graph's vertices");
  const int k2 = p2.part_count();
  std::vector<int> fill(static_cast<std::size_t>(p1.part_count()) * k2, 0);
  ProductEmbedding e{{quotient(g, p1), quotient(g, p2)}, c, {}};
  for (Vertex v = 0; v < g.order(); ++v) {
    int a = p1.part_of(v), b = p2.part_of(v);
    int z = fill[a * k2 + b]++;
    if (z >= c) return {std::nullopt, std::make_pair(a, b)};
    e.map.push_back({a, b, z});
  }
  return {std::move(e), std::nullopt};
}

/// Local-search cut starting from even/odd ids: sweep vertices in id order, moving any
/// vertex with more neighbours on its side than across, until stable.
/// With max degree <= 2t+1, each side then induces max degree <= t.
inline VertexPartition degree_partition(const Graph& g, int threshold) {
  if (threshold != 1 && threshold != 2)
    throw precondition_error("degree_partition: threshold must be 1 or 2");
  const int n = g.order();
  std::vector<int> side(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) side[v] = v % 2;
  for (bool moved = true; moved;) {
    moved = false;
    for (Vertex v = 0; v < n; ++v) {
      int same = 0;
      for (Vertex w : g.neighbors(v)) same += side[w] == side[v];
      if (2 * same > g.degree(v)) {
        side[v] ^= 1;
        moved = true;
      }
    }
  }
  std::vector<std::vector<Vertex>> parts(2);
  for (Vertex v = 0; v < n; ++v) parts[side[v]].push_back(v);
  std::erase_if(parts, [](const auto& p) { return p.empty(); });
  return VertexPartition(n, std::move(parts));
}

struct ApexFan {
  Digraph j;
  Digraph f;
  DirectedProductEmbedding embedding;
};

/// (h x P) + K_a; ids: h x P row-major with P of length path_len, then apex i at n*path_len + i.
inline Graph apex_fan_guest(const Graph& h, int path_len, int a) {
  return complete_join(strong(h, path(path_len)), complete(a));
}

/// Orientation of (h + K_a) and a fan over a bidirected path, with (h x P) + K_a embedded
/// in their directed strong product. J: h-edges follow `ordering`, apex -> h, apex i -> apex j
/// for i < j (apex i has id |h| + i). F: path 0..path_len-1 bidirected, hub path_len -> path.
inline ApexFan orient_apex_fan(const Graph& h, const std::vector<Vertex>& ordering, int path_len, int a) {
  const int nh = h.order();
  if (path_len < 1 || a < 0) throw precondition_error("orient_apex_fan: path_len >= 1 and a >= 0 required");
  if (static_cast<int>(ordering.size()) != nh) throw precondition_error("orient_apex_fan: ordering is not a permutation");
  std::vector<int> pos(static_cast<std::size_t>(nh), -1);
  for (int i = 0; i < nh; ++i) {
    Vertex v = ordering[i];
    if (v < 0 || v >= nh || pos[v] != -1) throw precondition_error("orient_apex_fan: ordering is not a permutation");
    pos[v] = i;
  }
  std::vector<Arc> jarcs;
  for (auto [u, v] : h.edges()) jarcs.push_back(pos[u] < pos[v] ? Arc{u, v} : Arc{v, u});
  for (int i = 0; i < a; ++i) {
    for (Vertex z = 0; z < nh; ++z) jarcs.emplace_back(nh + i, z);
    for (int k = i + 1; k < a; ++k) jarcs.emplace_back(nh + i, nh + k);
  }
  std::vector<Arc> farcs;
  for (int y = 0; y + 1 < path_len; ++y) {
    farcs.emplace_back(y, y + 1);
    farcs.emplace_back(y + 1, y);
  }
  for (int y = 0; y < path_len; ++y) farcs.emplace_back(path_len, y);

  ApexFan out{Digraph(nh + a, jarcs), Digraph(path_len + 1, farcs), {}};
  out.embedding.d1 = out.j;
  out.embedding.d2 = out.f;
  for (Vertex x = 0; x < nh; ++x)
    for (int y = 0; y < path_len; ++y) out.embedding.map.emplace_back(x, y);
  for (int i = 0; i < a; ++i) out.embedding.map.emplace_back(nh + i, path_len);
  return out;
}

}  // namespace prodstruct
