#pragma once

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "prodstruct/decomposition.hpp"
#include "prodstruct/graph.hpp"

namespace prodstruct {

/// Ordered partition (L_0, L_1, ...) of the host's vertices; empty layers only at the tail.
struct Layering {
  std::vector<std::vector<Vertex>> layers;

  int host_n() const {
    int n = 0;
    for (const auto& l : layers) n += static_cast<int>(l.size());
    return n;
  }

  /// Layer index per vertex.
  std::vector<int> layer_of() const {
    std::vector<int> out(static_cast<std::size_t>(host_n()), -1);
    for (int i = 0; i < static_cast<int>(layers.size()); ++i)
      for (Vertex v : layers[i]) out.at(v) = i;
    return out;
  }

  friend bool operator==(const Layering&, const Layering&) = default;
};

/// Throws invalid_decomposition unless l partitions V(g) with every edge inside or between consecutive layers.
inline void require_valid_layering(const Graph& g, const Layering& l) {
  std::vector<int> layer(static_cast<std::size_t>(g.order()), -1);
  bool seen_empty = false;
  for (int i = 0; i < static_cast<int>(l.layers.size()); ++i) {
    if (l.layers[i].empty()) {
      seen_empty = true;
      continue;
    }
    if (seen_empty) throw invalid_decomposition("layering: empty layer before layer " + std::to_string(i));
    for (Vertex v : l.layers[i]) {
      if (v < 0 || v >= g.order()) throw invalid_decomposition("layering: vertex out of range");
      if (layer[v] != -1) throw invalid_decomposition("layering: vertex " + std::to_string(v) + " in two layers");
      layer[v] = i;
    }
  }
  for (Vertex v = 0; v < g.order(); ++v)
    if (layer[v] == -1) throw invalid_decomposition("layering: vertex " + std::to_string(v) + " in no layer");
  for (auto [u, v] : g.edges())
    if (std::abs(layer[u] - layer[v]) > 1)
      throw invalid_decomposition("layering: edge " + std::to_string(u) + "-" + std::to_string(v) +
                                  " skips a layer");
}

/// A layering and a tree-decomposition together with k = max |L_i ∩ B_x|.
struct LayeredWitness {
  Layering layering;
  TreeDecomposition decomposition;
  int k = 0;
};

inline LayeredWitness make_layered_witness(const Graph& g, Layering l, TreeDecomposition td) {
  require_valid_layering(g, l);
  require_valid(g, td, "layered witness");
  auto layer = l.layer_of();
  int k = 0;
  for (const auto& bag : td.bags) {
    std::vector<int> count(l.layers.size(), 0);
    for (Vertex v : bag) k = std::max(k, ++count[layer[v]]);
  }
  return {std::move(l), td.normalize(), k};
}

/// L_i = vertices at distance i from r.
inline Layering bfs_layering(const Graph& g, Vertex r) {
  auto dist = bfs_distances(g, r);
  Layering l;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (dist[v] < 0)
      throw precondition_error("bfs_layering: graph is disconnected, vertex " + std::to_string(v) + " unreached");
    if (dist[v] >= static_cast<int>(l.layers.size())) l.layers.resize(dist[v] + 1);
    l.layers[dist[v]].push_back(v);
  }
  return l;
}

/// Bags L_{i-1} ∪ L_i; a single non-empty layer gives one bag.
inline PathDecomposition layering_to_path_decomposition(const Layering& l) {
  std::vector<std::vector<Vertex>> layers = l.layers;
  while (!layers.empty() && layers.back().empty()) layers.pop_back();
  for (std::size_t i = 0; i + 1 < layers.size(); ++i)
    if (layers[i].empty()) throw invalid_decomposition("layering: empty layer before the tail");
  PathDecomposition pd{l.host_n(), {}};
  if (layers.size() == 1) pd.bags.push_back(sorted_bag(layers[0]));
  for (std::size_t i = 1; i < layers.size(); ++i) pd.bags.push_back(sorted_bag(bag_union(sorted_bag(layers[i - 1]), sorted_bag(layers[i]))));
  return pd;
}

struct BandwidthDecomposition {
  TreeDecomposition decomposition;
  std::vector<std::vector<Vertex>> orders;  // per bag, sorted by (layer, id)
  std::vector<int> spans;                   // per bag span of the induced edges
  int max_span = 0;
};

/// Orders each bag by (layer, id); every induced edge then spans at most 2k - 1 positions.
inline BandwidthDecomposition witness_to_bandwidth_decomposition(const Graph& g, const LayeredWitness& w) {
  require_valid_layering(g, w.layering);
  require_valid(g, w.decomposition, "layered witness");
  auto layer = w.layering.layer_of();
  BandwidthDecomposition out{w.decomposition, {}, {}, 0};
  for (const auto& bag : w.decomposition.bags) {
    std::vector<Vertex> order = bag;
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
      return std::pair(layer[a], a) < std::pair(layer[b], b);
    });
    int span = ordering_span(g, order);
    out.orders.push_back(std::move(order));
    out.spans.push_back(span);
    out.max_span = std::max(out.max_span, span);
  }
  if (w.k > 0 && out.max_span > 2 * w.k - 1)
    throw std::logic_error("witness_to_bandwidth_decomposition: span exceeds 2k-1");
  return out;
}

/// X = union of odd layers, Y = union of even layers; empty parts are dropped.
inline VertexPartition witness_to_partition(const LayeredWitness& w) {
  std::vector<std::vector<Vertex>> parts(2);
  for (int i = 0; i < static_cast<int>(w.layering.layers.size()); ++i)
    for (Vertex v : w.layering.layers[i]) parts[i % 2 == 1 ? 0 : 1].push_back(v);
  std::erase_if(parts, [](const auto& p) { return p.empty(); });
  return VertexPartition(w.layering.host_n(), std::move(parts));
}

}  // namespace prodstruct
