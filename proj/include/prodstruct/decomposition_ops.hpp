#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "prodstruct/decomposition.hpp"
#include "prodstruct/embedding.hpp"

namespace prodstruct {

/// Pullbacks A'_x = {v : e(v)_1 in A_x} and B'_y = {v : e(v)_2 in B_y}. Empty bags are kept.
inline std::pair<TreeDecomposition, TreeDecomposition> project_product_decomposition(
    const ProductEmbedding& e, const TreeDecomposition& td_h1, const TreeDecomposition& td_h2) {
  if (e.factors.size() != 2) throw precondition_error("project_product_decomposition: expected two factors");
  require_valid(e.factors[0], td_h1, "first factor decomposition");
  require_valid(e.factors[1], td_h2, "second factor decomposition");
  const int n = static_cast<int>(e.map.size());
  auto pull = [&](const TreeDecomposition& td, int coord) {
    std::vector<std::vector<Vertex>> preimage(static_cast<std::size_t>(td.host_n));
    for (Vertex v = 0; v < n; ++v) preimage.at(e.map[v].at(coord)).push_back(v);
    TreeDecomposition out{n, {}, td.tree_edges};
    for (const auto& bag : td.bags) {
      Bag b;
      for (Vertex x : bag) b.insert(b.end(), preimage[x].begin(), preimage[x].end());
      out.bags.push_back(std::move(b));
    }
    return out.normalize();
  };
  return {pull(td_h1, 0), pull(td_h2, 1)};
}

namespace detail {

inline std::pair<Bag, Bag> bipartite_sides(const Graph& g, const std::vector<Vertex>& side_in) {
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : side_in) {
    if (v < 0 || v >= g.order()) throw precondition_error("bipartite side: vertex out of range");
    in[v] = 1;
  }
  for (auto [u, v] : g.edges())
    if (in[u] == in[v])
      throw precondition_error("not bipartite with respect to the side: edge " + std::to_string(u) + "-" +
                               std::to_string(v));
  Bag side, other;
  for (Vertex v = 0; v < g.order(); ++v) (in[v] ? side : other).push_back(v);
  return {side, other};
}

inline PathDecomposition star_bags(int n, const Bag& centres, const Bag& rest) {
  PathDecomposition pd{n, {}};
  for (Vertex v : centres) pd.bags.push_back(sorted_bag(bag_union({v}, rest)));
  if (centres.empty()) pd.bags.push_back(rest);
  return pd;
}

}  // namespace detail

/// For V = side and W its complement: bags {v} ∪ W for v in V, and bags {w} ∪ V for w in W.
inline std::pair<PathDecomposition, PathDecomposition> bipartite_orthogonal_paths(const Graph& g,
                                                                                  const std::vector<Vertex>& side) {
  auto [v, w] = detail::bipartite_sides(g, side);
  return {detail::star_bags(g.order(), v, w), detail::star_bags(g.order(), w, v)};
}

/// Bags {v} ∪ W for v in side; each bag induces a star plus isolated vertices.
inline PathDecomposition bipartite_star_decomposition(const Graph& g, const std::vector<Vertex>& side) {
  auto [v, w] = detail::bipartite_sides(g, side);
  return detail::star_bags(g.order(), v, w);
}

namespace detail {

/// Lowest-id node whose bag contains `clique`, or -1.
inline int node_containing(const TreeDecomposition& td, const Bag& clique) {
  for (int x = 0; x < td.nodes(); ++x)
    if (bag_contains(sorted_bag(td.bags[x]), clique)) return x;
  return -1;
}

inline int index_containing(const std::vector<Bag>& bags, const Bag& clique) {
  for (int i = 0; i < static_cast<int>(bags.size()); ++i)
    if (bag_contains(sorted_bag(bags[i]), clique)) return i;
  return -1;
}

inline Bag to_local(const Bag& bag, const Bag& global) {
  Bag out;
  for (Vertex v : global) out.push_back(static_cast<int>(std::lower_bound(bag.begin(), bag.end(), v) - bag.begin()));
  return out;
}

inline Bag to_global(const Bag& bag, const Bag& local) {
  Bag out;
  for (Vertex v : local) out.push_back(bag.at(v));
  return sorted_bag(out);
}

inline void require_taut(const Graph& g, const TreeDecomposition& td, const std::string& who) {
  auto r = require_valid(g, td, who);
  if (!r.taut) throw precondition_error(who + ": decomposition is not taut");
}

}  // namespace detail

/// Glues per-node decompositions of the torsos (in local ids of sorted B_x) into one
/// decomposition of g. Node ids: node 0's parts first, then node 1's, and so on.
/// Each tree edge xy joins the lowest-id nodes on both sides containing B_x ∩ B_y.
inline TreeDecomposition glue_tree_f(const Graph& g, const TreeDecomposition& td_in,
                                     const std::vector<TreeDecomposition>& torso_decomps) {
  TreeDecomposition td = td_in;
  td.normalize();
  detail::require_taut(g, td, "glue_tree_f");
  if (static_cast<int>(torso_decomps.size()) != td.nodes())
    throw precondition_error("glue_tree_f: expected one torso decomposition per node");
  TreeDecomposition out{g.order(), {}, {}};
  std::vector<int> offset;
  for (int x = 0; x < td.nodes(); ++x) {
    require_valid(torso(g, td, x), torso_decomps[x], "torso decomposition of node " + std::to_string(x));
    offset.push_back(out.nodes());
    for (const auto& bag : torso_decomps[x].bags) out.bags.push_back(detail::to_global(td.bags[x], bag));
    for (auto [a, b] : torso_decomps[x].tree_edges) out.tree_edges.emplace_back(a + offset[x], b + offset[x]);
  }
  for (auto [x, y] : td.tree_edges) {
    Bag clique = bag_intersection(td.bags[x], td.bags[y]);
    int a = detail::node_containing(torso_decomps[x], detail::to_local(td.bags[x], clique));
    int b = detail::node_containing(torso_decomps[y], detail::to_local(td.bags[y], clique));
    if (a < 0 || b < 0)
      throw precondition_error("glue_tree_f: adhesion clique of nodes " + std::to_string(x) + "-" + std::to_string(y) +
                               " lies in no torso bag");
    out.tree_edges.emplace_back(a + offset[x], b + offset[y]);
  }
  return out.normalize();
}

struct OrthogonalGluing {
  TreeDecomposition tree;
  PathDecomposition path;
};

/// Glues per-node (tree, path) decomposition pairs of g[B_x] (local ids of sorted B_x).
/// Leaves are removed lowest id first and re-attached in reverse. For each re-attached leaf
/// with shared clique K: tree parts are joined at the lowest nodes containing K, and the
/// path parts are overlaid as A'_i = A_i ∪ E_{i - i* + j*} with i*, j* the lowest bags containing K.
inline OrthogonalGluing glue_orthogonal(const Graph& g, const TreeDecomposition& td_in,
                                        const std::vector<std::pair<TreeDecomposition, PathDecomposition>>& pairs) {
  TreeDecomposition td = td_in;
  td.normalize();
  detail::require_taut(g, td, "glue_orthogonal");
  if (static_cast<int>(pairs.size()) != td.nodes())
    throw precondition_error("glue_orthogonal: expected one decomposition pair per node");
  if (td.nodes() == 0) return {{g.order(), {}, {}}, {g.order(), {}}};
  for (int x = 0; x < td.nodes(); ++x) {
    Graph local = induced_subgraph(g, td.bags[x]);
    require_valid(local, pairs[x].first, "tree decomposition of node " + std::to_string(x));
    require_valid(local, pairs[x].second, "path decomposition of node " + std::to_string(x));
  }

  TreeDecomposition tree{g.order(), {}, {}};
  std::map<int, Bag> path;  // index -> bag; indices may go negative while overlaying

  auto global_tree = [&](int x) {
    TreeDecomposition t{g.order(), {}, pairs[x].first.tree_edges};
    for (const auto& bag : pairs[x].first.bags) t.bags.push_back(detail::to_global(td.bags[x], bag));
    return t;
  };
  auto global_path = [&](int x) {
    std::vector<Bag> bags;
    for (const auto& bag : pairs[x].second.bags) bags.push_back(detail::to_global(td.bags[x], bag));
    return bags;
  };

  const LeafOrder order = leaf_removal_order(td);
  tree = global_tree(order.base);
  {
    auto bags = global_path(order.base);
    for (int i = 0; i < static_cast<int>(bags.size()); ++i) path[i] = bags[i];
  }
  for (auto it = order.removed.rbegin(); it != order.removed.rend(); ++it) {
    auto [leaf, nb] = *it;
    Bag clique = bag_intersection(td.bags[leaf], td.bags[nb]);
    TreeDecomposition s = global_tree(leaf);
    auto e = global_path(leaf);

    int a_star = detail::node_containing(tree, clique);
    int p_star = detail::node_containing(s, clique);
    std::optional<int> i_star;
    for (const auto& [i, bag] : path)
      if (bag_contains(bag, clique)) {
        i_star = i;
        break;
      }
    int j_star = detail::index_containing(e, clique);
    if (a_star < 0 || p_star < 0 || !i_star || j_star < 0)
      throw precondition_error("glue_orthogonal: shared clique of nodes " + std::to_string(leaf) + "-" +
                               std::to_string(nb) + " is not inside a common bag");

    const int base = tree.nodes();
    for (auto& bag : s.bags) tree.bags.push_back(std::move(bag));
    for (auto [a, b] : s.tree_edges) tree.tree_edges.emplace_back(a + base, b + base);
    tree.tree_edges.emplace_back(a_star, p_star + base);

    for (int j = 0; j < static_cast<int>(e.size()); ++j) {
      int i = j - j_star + *i_star;
      path[i] = bag_union(path[i], e[j]);
    }
  }

  PathDecomposition pd{g.order(), {}};
  for (auto& [i, bag] : path) pd.bags.push_back(bag);
  return {tree.normalize(), pd};
}

}  // namespace prodstruct
