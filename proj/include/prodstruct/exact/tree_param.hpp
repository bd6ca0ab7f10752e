#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "prodstruct/exact/widths.hpp"

namespace prodstruct::exact {

/// Hereditary bag parameters accepted by tree_param_exact.
enum class Param { tw, pw, bw, td, max_degree, longest_path };

inline std::string_view param_name(Param p) {
  switch (p) {
    case Param::tw: return "tw";
    case Param::pw: return "pw";
    case Param::bw: return "bw";
    case Param::td: return "td";
    case Param::max_degree: return "max-degree";
    case Param::longest_path: return "longest-path";
  }
  return "?";
}

inline Param parse_param(std::string_view name) {
  for (Param p : {Param::tw, Param::pw, Param::bw, Param::td, Param::max_degree, Param::longest_path})
    if (param_name(p) == name) return p;
  throw precondition_error("unknown or non-hereditary bag parameter '" + std::string(name) + "'");
}

inline int param_value(const Graph& g, Param p) {
  const Options unlimited{hard_limit};
  switch (p) {
    case Param::tw: return treewidth_exact(g, unlimited).value;
    case Param::pw: return pathwidth_exact(g, unlimited).value;
    case Param::bw: return bandwidth_exact(g, unlimited).value;
    case Param::td: return treedepth_exact(g, unlimited).value;
    case Param::max_degree: return g.max_degree();
    case Param::longest_path: return longest_path_order(g, unlimited);
  }
  return 0;
}

inline constexpr int tree_param_cap = 9;

/// Exact tree-f: min over tree-decompositions of the max of f over bag-induced subgraphs.
///
/// Any tree-decomposition can be replaced by the clique tree of a perfect elimination
/// ordering of its bag completion; those bags {v} ∪ Q(v) are cliques of the completion,
/// hence subsets of original bags, and f is monotone under induced subgraphs. So the
/// minimum over elimination orderings is exact, and the DP below computes it.
inline Result tree_param_exact(const Graph& g, Param p, const Options& opt = {}) {
  check_cap("tree_param_exact", g, tree_param_cap, opt);
  const int n = g.order();
  auto adj = adjacency_masks(g);
  std::vector<int> f(std::size_t{1} << n, -1);
  auto f_of = [&](Mask bag) {
    int& slot = f[bag];
    if (slot < 0) slot = param_value(induced_subgraph(g, mask_vertices(bag)), p);
    return slot;
  };
  auto [value, order] =
      min_max_ordering(n, [&](int v, Mask before) { return f_of(fill_neighbours(adj, before, v) | bit(v)); });
  Result r{value, order, simplify(elimination_tree_decomposition(g, order)), {}};
  if (n == 0) r.value = 0;
  return r;
}

/// Measured max of f over the bags of a decomposition.
inline int max_bag_param(const Graph& g, const TreeDecomposition& td, Param p) {
  int best = 0;
  for (const auto& bag : td.bags) best = std::max(best, param_value(induced_subgraph(g, sorted_bag(bag)), p));
  return best;
}

/// min over v of f(g[N[v]]), a lower bound on tree-f(g).
inline int neighborhood_lower_bound(const Graph& g, Param p) {
  if (g.order() == 0) return 0;
  int best = std::numeric_limits<int>::max();
  for (Vertex v = 0; v < g.order(); ++v) {
    std::vector<Vertex> closed{v};
    for (Vertex w : g.neighbors(v)) closed.push_back(w);
    best = std::min(best, param_value(induced_subgraph(g, sorted_bag(closed)), p));
  }
  return best;
}

}  // namespace prodstruct::exact
