#pragma once

#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "prodstruct/decomposition.hpp"
#include "prodstruct/embedding.hpp"
#include "prodstruct/error.hpp"
#include "prodstruct/graph.hpp"
#include "prodstruct/layering.hpp"
#include "prodstruct/planar.hpp"

namespace prodstruct::io {

using json = nlohmann::ordered_json;

namespace detail {

inline const json& field(const json& j, const char* key, const std::string& what) {
  if (!j.is_object() || !j.contains(key)) throw format_error(what + ": missing field \"" + key + "\"");
  return j.at(key);
}

inline int read_int(const json& j, const std::string& what) {
  if (!j.is_number_integer()) throw format_error(what + ": expected an integer");
  return j.get<int>();
}

inline int read_count(const json& j, const char* key, const std::string& what) {
  int n = read_int(field(j, key, what), what + "." + key);
  if (n < 0) throw format_error(what + "." + key + ": must be non-negative");
  return n;
}

inline std::vector<int> read_ints(const json& j, const std::string& what) {
  if (!j.is_array()) throw format_error(what + ": expected an array");
  std::vector<int> out;
  for (const auto& x : j) out.push_back(read_int(x, what));
  return out;
}

inline std::pair<int, int> read_pair(const json& j, const std::string& what) {
  auto v = read_ints(j, what);
  if (v.size() != 2) throw format_error(what + ": expected a pair");
  return {v[0], v[1]};
}

inline std::vector<std::pair<int, int>> read_pairs(const json& j, const std::string& what, int n, bool ordered) {
  if (!j.is_array()) throw format_error(what + ": expected an array of pairs");
  std::vector<std::pair<int, int>> out;
  std::set<std::pair<int, int>> seen;
  for (const auto& x : j) {
    auto [u, v] = read_pair(x, what);
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw format_error(what + ": id out of range in [" + std::to_string(u) + "," + std::to_string(v) + "]");
    if (u == v) throw format_error(what + ": self-loop at " + std::to_string(u));
    auto key = ordered ? std::pair(u, v) : std::pair(std::min(u, v), std::max(u, v));
    if (!seen.insert(key).second)
      throw format_error(what + ": duplicate [" + std::to_string(u) + "," + std::to_string(v) + "]");
    out.emplace_back(u, v);
  }
  return out;
}

inline std::vector<Bag> read_bags(const json& j, int host_n, const std::string& what) {
  if (!j.is_array()) throw format_error(what + ": expected an array of bags");
  std::vector<Bag> out;
  for (const auto& b : j) {
    Bag bag = read_ints(b, what);
    for (Vertex v : bag)
      if (v < 0 || v >= host_n) throw format_error(what + ": vertex " + std::to_string(v) + " out of range");
    out.push_back(std::move(bag));
  }
  return out;
}

}  // namespace detail

// Graph: {"n", "edges"} with u < v, sorted.
inline json to_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.order()}, {"edges", edges}};
}

inline Graph graph_from_json(const json& j) {
  int n = detail::read_count(j, "n", "graph");
  auto edges = detail::read_pairs(detail::field(j, "edges", "graph"), "graph.edges", n, false);
  return Graph(n, edges);
}

// Digraph: {"n", "arcs"} sorted.
inline json to_json(const Digraph& d) {
  json arcs = json::array();
  for (auto [t, h] : d.arcs()) arcs.push_back({t, h});
  return {{"n", d.order()}, {"arcs", arcs}};
}

inline Digraph digraph_from_json(const json& j) {
  int n = detail::read_count(j, "n", "digraph");
  auto arcs = detail::read_pairs(detail::field(j, "arcs", "digraph"), "digraph.arcs", n, true);
  return Digraph(n, arcs);
}

inline json to_json(const TreeDecomposition& td_in) {
  TreeDecomposition td = td_in;
  td.normalize();
  json edges = json::array();
  for (auto [x, y] : td.tree_edges) edges.push_back({x, y});
  return {{"host_n", td.host_n}, {"nodes", td.nodes()}, {"tree_edges", edges}, {"bags", td.bags}};
}

inline TreeDecomposition tree_decomposition_from_json(const json& j) {
  TreeDecomposition td;
  td.host_n = detail::read_count(j, "host_n", "tree decomposition");
  int nodes = detail::read_count(j, "nodes", "tree decomposition");
  td.bags = detail::read_bags(detail::field(j, "bags", "tree decomposition"), td.host_n, "tree decomposition.bags");
  if (static_cast<int>(td.bags.size()) != nodes) throw format_error("tree decomposition: nodes differs from bag count");
  td.tree_edges = detail::read_pairs(detail::field(j, "tree_edges", "tree decomposition"), "tree decomposition.tree_edges",
                                     nodes, false);
  return td;
}

/// Bags keep their given order, so a bag may carry a vertex ordering.
inline json to_json(const PathDecomposition& pd) { return {{"host_n", pd.host_n}, {"bags", pd.bags}}; }

inline PathDecomposition path_decomposition_from_json(const json& j) {
  PathDecomposition pd;
  pd.host_n = detail::read_count(j, "host_n", "path decomposition");
  pd.bags = detail::read_bags(detail::field(j, "bags", "path decomposition"), pd.host_n, "path decomposition.bags");
  return pd;
}

inline json to_json(const Layering& l) { return {{"layers", l.layers}}; }

inline Layering layering_from_json(const json& j) {
  const json& layers = detail::field(j, "layers", "layering");
  if (!layers.is_array()) throw format_error("layering.layers: expected an array");
  Layering l;
  for (const auto& layer : layers) l.layers.push_back(detail::read_ints(layer, "layering.layers"));
  return l;
}

inline json to_json(const PlaneTriangulation& pt) {
  return {{"n", pt.graph.order()}, {"rotation", pt.rotation}, {"outer", pt.outer}};
}

/// The graph is recovered from the rotation system, which must list each edge from both ends.
inline PlaneTriangulation triangulation_from_json(const json& j) {
  int n = detail::read_count(j, "n", "triangulation");
  const json& rot = detail::field(j, "rotation", "triangulation");
  if (!rot.is_array() || static_cast<int>(rot.size()) != n)
    throw format_error("triangulation.rotation: expected one list per vertex");
  PlaneTriangulation pt;
  std::set<std::pair<int, int>> darts;
  for (int v = 0; v < n; ++v) {
    auto nb = detail::read_ints(rot[v], "triangulation.rotation");
    for (int u : nb) {
      if (u < 0 || u >= n) throw format_error("triangulation.rotation: id " + std::to_string(u) + " out of range");
      if (u == v) throw format_error("triangulation.rotation: self-loop at " + std::to_string(v));
      if (!darts.insert({v, u}).second)
        throw format_error("triangulation.rotation: duplicate neighbour " + std::to_string(u) + " of " + std::to_string(v));
    }
    pt.rotation.push_back(std::move(nb));
  }
  std::vector<Edge> edges;
  for (auto [v, u] : darts) {
    if (!darts.count({u, v}))
      throw format_error("triangulation.rotation: " + std::to_string(u) + " missing from the rotation of " +
                         std::to_string(v) + "'s neighbour");
    if (v < u) edges.emplace_back(v, u);
  }
  pt.graph = Graph(n, edges);
  auto outer = detail::read_ints(detail::field(j, "outer", "triangulation"), "triangulation.outer");
  if (outer.size() != 3) throw format_error("triangulation.outer: expected three vertices");
  for (int i = 0; i < 3; ++i) {
    if (outer[i] < 0 || outer[i] >= n) throw format_error("triangulation.outer: id out of range");
    pt.outer[i] = outer[i];
  }
  return pt;
}

// VertexPartition: {"n", "parts"}.
inline json to_json(const VertexPartition& p) { return {{"n", p.vertex_count()}, {"parts", p.parts()}}; }

inline VertexPartition partition_from_json(const json& j) {
  int n = detail::read_count(j, "n", "partition");
  const json& parts = detail::field(j, "parts", "partition");
  if (!parts.is_array()) throw format_error("partition.parts: expected an array");
  std::vector<std::vector<Vertex>> out;
  for (const auto& part : parts) out.push_back(detail::read_ints(part, "partition.parts"));
  return VertexPartition(n, std::move(out));
}

// ProductEmbedding: {"factors": [graph, graph], "c": int|null, "map": [[x,y(,z)]...]}.
inline json to_json(const ProductEmbedding& e) {
  json factors = json::array();
  for (const auto& f : e.factors) factors.push_back(to_json(f));
  return {{"factors", factors}, {"c", e.c ? json(*e.c) : json(nullptr)}, {"map", e.map}};
}

inline ProductEmbedding embedding_from_json(const json& j) {
  ProductEmbedding e;
  const json& factors = detail::field(j, "factors", "embedding");
  if (!factors.is_array()) throw format_error("embedding.factors: expected an array");
  for (const auto& f : factors) e.factors.push_back(graph_from_json(f));
  const json& c = detail::field(j, "c", "embedding");
  if (!c.is_null()) e.c = detail::read_int(c, "embedding.c");
  const json& map = detail::field(j, "map", "embedding");
  if (!map.is_array()) throw format_error("embedding.map: expected an array");
  for (const auto& m : map) e.map.push_back(detail::read_ints(m, "embedding.map"));
  return e;
}

inline json to_json(const DirectedProductEmbedding& e) {
  json map = json::array();
  for (auto [x, y] : e.map) map.push_back({x, y});
  return {{"factors", {to_json(e.d1), to_json(e.d2)}}, {"c", nullptr}, {"map", map}};
}

inline DirectedProductEmbedding directed_embedding_from_json(const json& j) {
  DirectedProductEmbedding e;
  const json& factors = detail::field(j, "factors", "directed embedding");
  if (!factors.is_array() || factors.size() != 2) throw format_error("directed embedding.factors: expected two digraphs");
  e.d1 = digraph_from_json(factors[0]);
  e.d2 = digraph_from_json(factors[1]);
  const json& map = detail::field(j, "map", "directed embedding");
  if (!map.is_array()) throw format_error("directed embedding.map: expected an array");
  for (const auto& m : map) e.map.push_back(detail::read_pair(m, "directed embedding.map"));
  return e;
}

/// Oracle report as printed by the CLI.
inline json report(std::string_view param, int value, json witness, std::optional<std::uint64_t> seed) {
  return {{"param", param}, {"value", value}, {"witness", std::move(witness)}, {"seed", seed ? json(*seed) : json(nullptr)}};
}

inline json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw format_error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw format_error(path + ": " + e.what());
  }
}

inline void write_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump() << '\n';
}

}  // namespace prodstruct::io
