#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "prodstruct/graph.hpp"

namespace prodstruct {

/// Map of a guest graph into H1 x H2 (x K_c), strong-product adjacency.
struct ProductEmbedding {
  std::vector<Graph> factors;          // H1, H2
  std::optional<int> c;                // third factor K_c when set
  std::vector<std::vector<int>> map;   // guest vertex -> coordinates

  int arity() const noexcept { return c ? 3 : 2; }
  friend bool operator==(const ProductEmbedding&, const ProductEmbedding&) = default;
};

/// Map of a guest graph into D1 directed-strong D2.
struct DirectedProductEmbedding {
  Digraph d1;
  Digraph d2;
  std::vector<std::pair<int, int>> map;

  friend bool operator==(const DirectedProductEmbedding&, const DirectedProductEmbedding&) = default;
};

struct EmbeddingCheck {
  bool valid = true;
  std::string violation;
  explicit operator bool() const noexcept { return valid; }
};

/// Verifies injectivity and that every guest edge maps to a strong-product edge.
inline EmbeddingCheck check_embedding(const Graph& guest, const ProductEmbedding& e) {
  auto fail = [](std::string why) { return EmbeddingCheck{false, std::move(why)}; };
  if (e.factors.size() != 2) return fail("expected two graph factors");
  if (e.c && *e.c < 1) return fail("third factor size must be positive");
  if (static_cast<int>(e.map.size()) != guest.order()) return fail("map size differs from guest order");
  const std::size_t arity = e.c ? 3 : 2;
  std::set<std::vector<int>> images;
  for (Vertex v = 0; v < guest.order(); ++v) {
    const auto& t = e.map[v];
    if (t.size() != arity) return fail("vertex " + std::to_string(v) + " has wrong tuple length");
    for (std::size_t k = 0; k < 2; ++k)
      if (t[k] < 0 || t[k] >= e.factors[k].order())
        return fail("vertex " + std::to_string(v) + " coordinate out of range");
    if (arity == 3 && (t[2] < 0 || t[2] >= *e.c))
      return fail("vertex " + std::to_string(v) + " third coordinate out of range");
    if (!images.insert(t).second) return fail("vertex " + std::to_string(v) + " shares an image");
  }
  for (auto [u, v] : guest.edges()) {
    const auto &a = e.map[u], &b = e.map[v];
    for (std::size_t k = 0; k < arity; ++k) {
      bool ok = a[k] == b[k] || (k < 2 ? e.factors[k].adjacent(a[k], b[k]) : true);
      if (!ok)
        return fail("edge " + std::to_string(u) + "-" + std::to_string(v) + " breaks coordinate " +
                    std::to_string(k));
    }
  }
  return {};
}

/// Verifies injectivity and that each guest edge is an arc of D1 directed-strong D2
/// in at least one direction.
inline EmbeddingCheck check_directed_embedding(const Graph& guest, const DirectedProductEmbedding& e) {
  auto fail = [](std::string why) { return EmbeddingCheck{false, std::move(why)}; };
  if (static_cast<int>(e.map.size()) != guest.order()) return fail("map size differs from guest order");
  std::set<std::pair<int, int>> images;
  for (Vertex v = 0; v < guest.order(); ++v) {
    auto [x, y] = e.map[v];
    if (x < 0 || x >= e.d1.order() || y < 0 || y >= e.d2.order())
      return fail("vertex " + std::to_string(v) + " coordinate out of range");
    if (!images.insert(e.map[v]).second) return fail("vertex " + std::to_string(v) + " shares an image");
  }
  auto arc = [&](std::pair<int, int> s, std::pair<int, int> t) {
    return (s.first == t.first || e.d1.has_arc(s.first, t.first)) &&
           (s.second == t.second || e.d2.has_arc(s.second, t.second));
  };
  for (auto [u, v] : guest.edges())
    if (!arc(e.map[u], e.map[v]) && !arc(e.map[v], e.map[u]))
      return fail("edge " + std::to_string(u) + "-" + std::to_string(v) + " is not realised by an arc");
  return {};
}

}  // namespace prodstruct
