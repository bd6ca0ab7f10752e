#pragma once

#include <array>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "prodstruct/decomposition.hpp"
#include "prodstruct/embedding.hpp"
#include "prodstruct/exact/widths.hpp"

namespace prodstruct {

struct DirectedGluing {
  DirectedProductEmbedding embedding;
  int h = 0;                                       // adhesion of the input decomposition
  std::array<int, 2> c{};                          // max tw(underlying(J_i)) over bags
  std::array<int, 2> d{};                          // max indeg(J_i) over bags
  std::array<TreeDecomposition, 2> factor_decompositions;  // of underlying(D_i), width <= c_i + h
};

namespace detail {

inline TreeDecomposition shifted(const TreeDecomposition& td, int offset, int host_n) {
  TreeDecomposition out{host_n, {}, td.tree_edges};
  for (const auto& bag : td.bags) {
    Bag b;
    for (Vertex v : bag) b.push_back(v + offset);
    out.bags.push_back(std::move(b));
  }
  return out;
}

}  // namespace detail

/// Glues per-bag directed product embeddings of g[B_t] along a taut tree-decomposition.
/// Bag t's embedding indexes g[B_t] by the sorted order of B_t. Leaves are removed in
/// ascending id order and re-attached in reverse: each new leaf contributes a disjoint
/// copy of its factors J_i, with arcs from the projection K_i of the shared clique to J_i.
inline DirectedGluing glue_directed_products(const Graph& g, const TreeDecomposition& td_in,
                                             const std::vector<DirectedProductEmbedding>& bag_embeddings,
                                             std::optional<int> declared_h = std::nullopt,
                                             const exact::Options& opt = {}) {
  TreeDecomposition td = td_in;
  td.normalize();
  auto report = require_valid(g, td, "glue_directed_products");
  if (td.nodes() == 0) throw precondition_error("glue_directed_products: decomposition has no nodes");
  if (static_cast<int>(bag_embeddings.size()) != td.nodes())
    throw precondition_error("glue_directed_products: expected one embedding per node");
  for (auto [x, y] : td.tree_edges) {
    Bag common = bag_intersection(td.bags[x], td.bags[y]);
    if (!is_clique(g, common))
      throw precondition_error("glue_directed_products: not taut, adhesion of nodes " + std::to_string(x) + "-" +
                               std::to_string(y) + " is not a clique");
    if (declared_h && static_cast<int>(common.size()) > *declared_h)
      throw precondition_error("glue_directed_products: adhesion of nodes " + std::to_string(x) + "-" +
                               std::to_string(y) + " exceeds h");
  }

  DirectedGluing out;
  out.h = declared_h.value_or(report.adhesion);
  std::array<std::vector<TreeDecomposition>, 2> bag_tds;
  for (int t = 0; t < td.nodes(); ++t) {
    const auto& e = bag_embeddings[t];
    auto check = check_directed_embedding(induced_subgraph(g, td.bags[t]), e);
    if (!check) throw precondition_error("glue_directed_products: node " + std::to_string(t) + ": " + check.violation);
    for (int i = 0; i < 2; ++i) {
      const Digraph& j = i == 0 ? e.d1 : e.d2;
      auto r = exact::treewidth_exact(underlying(j), opt);
      out.c[i] = std::max(out.c[i], r.value);
      out.d[i] = std::max(out.d[i], j.max_indegree());
      bag_tds[i].push_back(*r.decomposition);
    }
  }

  const LeafOrder order = leaf_removal_order(td);
  std::array<std::vector<Arc>, 2> arcs;
  std::array<int, 2> size{0, 0};
  std::array<TreeDecomposition, 2> acc;
  std::vector<std::pair<int, int>> image(static_cast<std::size_t>(g.order()), {-1, -1});

  auto add_bag = [&](int t, const Bag& fresh, const Bag& shared) {
    const auto& e = bag_embeddings[t];
    std::array<int, 2> offset = size;
    std::array<std::set<int>, 2> projection;
    for (Vertex k : shared) {
      projection[0].insert(image[k].first);
      projection[1].insert(image[k].second);
    }
    for (int i = 0; i < 2; ++i) {
      const Digraph& j = i == 0 ? e.d1 : e.d2;
      for (auto [a, b] : j.arcs()) arcs[i].emplace_back(a + offset[i], b + offset[i]);
      for (int k : projection[i])
        for (int v = 0; v < j.order(); ++v) arcs[i].emplace_back(k, v + offset[i]);
      size[i] += j.order();

      TreeDecomposition part = detail::shifted(bag_tds[i][t], offset[i], 0);
      for (auto& bag : part.bags) bag.insert(bag.end(), projection[i].begin(), projection[i].end());
      const int base = acc[i].nodes();
      if (base > 0 && part.nodes() > 0) {
        Bag kset(projection[i].begin(), projection[i].end());
        int attach = -1;
        for (int x = 0; x < base && attach == -1; ++x)
          if (bag_contains(sorted_bag(acc[i].bags[x]), kset)) attach = x;
        if (attach == -1) throw std::logic_error("glue_directed_products: projected clique not in a bag");
        acc[i].tree_edges.emplace_back(attach, base);
      }
      for (auto [a, b] : part.tree_edges) acc[i].tree_edges.emplace_back(a + base, b + base);
      for (auto& bag : part.bags) acc[i].bags.push_back(std::move(bag));
    }
    const Bag& bag = td.bags[t];
    for (Vertex v : fresh) {
      auto local = std::lower_bound(bag.begin(), bag.end(), v) - bag.begin();
      auto [x, y] = e.map[local];
      image[v] = {x + offset[0], y + offset[1]};
    }
  };

  add_bag(order.base, td.bags[order.base], {});
  for (auto it = order.removed.rbegin(); it != order.removed.rend(); ++it) {
    auto [leaf, nb] = *it;
    Bag shared = bag_intersection(td.bags[leaf], td.bags[nb]), fresh;
    std::set_difference(td.bags[leaf].begin(), td.bags[leaf].end(), shared.begin(), shared.end(),
                        std::back_inserter(fresh));
    add_bag(leaf, fresh, shared);
  }

  out.embedding.d1 = Digraph(size[0], arcs[0]);
  out.embedding.d2 = Digraph(size[1], arcs[1]);
  out.embedding.map = image;
  for (int i = 0; i < 2; ++i) {
    acc[i].host_n = size[i];
    out.factor_decompositions[i] = acc[i].normalize();
  }
  return out;
}

}  // namespace prodstruct
