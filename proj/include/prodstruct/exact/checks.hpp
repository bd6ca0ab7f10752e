#pragma once

#include <cstdint>
#include <vector>

#include "prodstruct/exact/orthogonal.hpp"
#include "prodstruct/exact/tree_param.hpp"
#include "prodstruct/rng.hpp"

namespace prodstruct::exact {

/// True iff every tree-decomposition of g (refined to clique trees of chordal
/// completions) has a bag inducing a path on n vertices. Longest-path order is
/// monotone under induced subgraphs, so this equals tree-(longest path)(g) >= n.
inline bool hex_bag_path_check(const Graph& g, int n, const Options& opt = {}) {
  if (n < 1) throw precondition_error("hex_bag_path_check: n must be positive");
  return tree_param_exact(g, Param::longest_path, opt).value >= n;
}

/// Same verdict over every raw bag family (antichains with a join tree); hosts of <= 5 vertices.
inline bool hex_bag_path_check_raw(const Graph& g, int n) {
  for (const auto& family : raw_decomposition_families(g)) {
    bool found = false;
    for (Mask bag : family)
      if (longest_path_order(induced_subgraph(g, mask_vertices(bag))) >= n) found = true;
    if (!found) return false;
  }
  return true;
}

struct MixingReport {
  int n = 0;
  int d = 0;
  int set_size = 0;        // s = ceil(2n / sqrt(d))
  int samples = 0;
  int failures = 0;        // sampled pairs with no S-T edge
  bool vacuous = false;    // 2s > n, no disjoint pair exists
  std::uint64_t seed = 0;
};

/// Samples disjoint S, T with |S| = |T| = ceil(2n/sqrt(d)) and counts pairs with no edge between them.
inline MixingReport expander_mixing_check(const Graph& g, int d, int samples, std::uint64_t seed) {
  const int n = g.order();
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) != d) throw precondition_error("expander_mixing_check: graph is not d-regular");
  if (d < 1) throw precondition_error("expander_mixing_check: d must be positive");
  MixingReport r{n, d, 0, samples, 0, false, seed};
  // Smallest s with s^2 d >= 4 n^2.
  std::int64_t s = 0;
  while (s * s * d < 4LL * n * n) ++s;
  r.set_size = static_cast<int>(s);
  if (2 * s > n) {
    r.vacuous = true;
    return r;
  }
  SplitMix64 rng(seed);
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::vector<char> in_t(static_cast<std::size_t>(n));
  for (int trial = 0; trial < samples; ++trial) {
    for (int i = 0; i < n; ++i) perm[i] = i;
    rng.shuffle(perm);
    std::fill(in_t.begin(), in_t.end(), 0);
    for (int i = r.set_size; i < 2 * r.set_size; ++i) in_t[perm[i]] = 1;
    bool crossing = false;
    for (int i = 0; i < r.set_size && !crossing; ++i)
      for (Vertex w : g.neighbors(perm[i]))
        if (in_t[w]) {
          crossing = true;
          break;
        }
    if (!crossing) ++r.failures;
  }
  return r;
}

}  // namespace prodstruct::exact
