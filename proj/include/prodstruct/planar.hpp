#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "prodstruct/decomposition.hpp"
#include "prodstruct/graph.hpp"

namespace prodstruct {

/// Plane triangulation as a rotation system. The face to the left of dart u->v continues
/// with v -> succ_v(u), where succ_v(u) follows u cyclically in rotation[v].
/// `outer` lists an oriented face (darts outer[0]->outer[1]->outer[2]->outer[0]).
struct PlaneTriangulation {
  Graph graph;
  std::vector<std::vector<Vertex>> rotation;
  std::array<Vertex, 3> outer{};

  friend bool operator==(const PlaneTriangulation&, const PlaneTriangulation&) = default;
};

using Face = std::array<Vertex, 3>;

namespace detail {

inline Vertex rotation_successor(const PlaneTriangulation& pt, Vertex v, Vertex u) {
  const auto& rot = pt.rotation[v];
  auto it = std::find(rot.begin(), rot.end(), u);
  ++it;
  return it == rot.end() ? rot.front() : *it;
}

inline std::string walk_text(const std::vector<Vertex>& walk) {
  std::string s;
  for (Vertex v : walk) s += (s.empty() ? "" : "->") + std::to_string(v);
  return s;
}

}  // namespace detail

/// Face triangles in discovery order (darts scanned by tail id, then rotation position).
/// Throws invalid_embedding when the rotation system is not a plane triangulation.
inline std::vector<Face> faces(const PlaneTriangulation& pt) {
  const Graph& g = pt.graph;
  const int n = g.order();
  if (static_cast<int>(pt.rotation.size()) != n) throw invalid_embedding("rotation system size differs from graph order");
  for (Vertex v = 0; v < n; ++v) {
    auto sorted = pt.rotation[v];
    std::sort(sorted.begin(), sorted.end());
    if (sorted != g.neighbors(v))
      throw invalid_embedding("rotation at vertex " + std::to_string(v) + " does not list its neighbours");
  }
  std::map<std::pair<Vertex, Vertex>, bool> used;
  std::vector<Face> out;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : pt.rotation[u]) {
      if (used[{u, v}]) continue;
      std::vector<Vertex> walk{u};
      Vertex a = u, b = v;
      while (!used[{a, b}]) {
        used[{a, b}] = true;
        Vertex c = detail::rotation_successor(pt, b, a);
        a = b;
        b = c;
        walk.push_back(a);
        if (walk.size() > 4) break;
      }
      if (walk.size() != 4 || walk.back() != u || a != u || b != v)
        throw invalid_embedding("non-triangular face walk " + detail::walk_text(walk));
      out.push_back({walk[0], walk[1], walk[2]});
    }
  const long euler = static_cast<long>(n) - static_cast<long>(g.size()) + static_cast<long>(out.size());
  if (n > 0 && euler != 2)
    throw invalid_embedding("Euler's formula fails: n - m + f = " + std::to_string(euler));
  return out;
}

inline bool same_face(const Face& f, const Face& g) {
  for (int s = 0; s < 3; ++s)
    if (f[0] == g[s] && f[1] == g[(s + 1) % 3] && f[2] == g[(s + 2) % 3]) return true;
  return false;
}

/// Index of the outer face in faces(pt); throws if it is not a face.
inline int outer_face_index(const PlaneTriangulation& pt, const std::vector<Face>& fs) {
  for (int i = 0; i < static_cast<int>(fs.size()); ++i)
    if (same_face(fs[i], pt.outer)) return i;
  throw invalid_embedding("outer triple is not a face");
}

inline void require_valid_triangulation(const PlaneTriangulation& pt) {
  auto fs = faces(pt);
  outer_face_index(pt, fs);
}

struct LexBfsTree {
  Vertex root = 0;
  std::vector<Vertex> parent;                 // -1 at the root
  std::vector<std::vector<Vertex>> layers;    // each layer in its order ≼_i
  std::vector<Vertex> order;                  // ≼: the layers concatenated
  std::vector<int> position;                  // position of each vertex in ≼
};

/// BFS tree whose layers are ordered by parent position then id; each vertex's parent
/// is its ≼_i-least neighbour in the previous layer.
inline LexBfsTree lex_bfs(const PlaneTriangulation& pt, Vertex r) {
  require_valid_triangulation(pt);
  if (std::find(pt.outer.begin(), pt.outer.end(), r) == pt.outer.end())
    throw precondition_error("lex_bfs: root " + std::to_string(r) + " is not on the outer face");
  const Graph& g = pt.graph;
  const int n = g.order();
  LexBfsTree t;
  t.root = r;
  t.parent.assign(static_cast<std::size_t>(n), -1);
  t.position.assign(static_cast<std::size_t>(n), -1);
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  seen[r] = 1;
  t.layers.push_back({r});
  while (true) {
    const auto& prev = t.layers.back();
    for (Vertex v : prev) {
      t.position[v] = static_cast<int>(t.order.size());
      t.order.push_back(v);
    }
    std::vector<Vertex> next;
    for (Vertex u : prev)  // in ≼_i order, so the first claim is the least neighbour
      for (Vertex w : g.neighbors(u))
        if (!seen[w]) {
          seen[w] = 1;
          t.parent[w] = u;
          next.push_back(w);
        }
    if (next.empty()) break;
    std::sort(next.begin(), next.end(), [&](Vertex a, Vertex b) {
      return std::pair(t.position[t.parent[a]], a) < std::pair(t.position[t.parent[b]], b);
    });
    t.layers.push_back(std::move(next));
  }
  if (static_cast<int>(t.order.size()) != n) throw invalid_embedding("lex_bfs: triangulation is disconnected");
  return t;
}

struct Cotree {
  std::vector<Face> faces;
  std::vector<std::pair<int, int>> edges;  // dual edges between face indices
};

/// Dual spanning tree crossing exactly the non-tree edges.
inline Cotree cotree(const PlaneTriangulation& pt, const LexBfsTree& t) {
  Cotree ct{faces(pt), {}};
  std::map<std::pair<Vertex, Vertex>, int> face_of_dart;
  for (int f = 0; f < static_cast<int>(ct.faces.size()); ++f)
    for (int s = 0; s < 3; ++s) face_of_dart[{ct.faces[f][s], ct.faces[f][(s + 1) % 3]}] = f;
  std::vector<int> root(ct.faces.size());
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (auto [u, v] : pt.graph.edges()) {
    if (t.parent[u] == v || t.parent[v] == u) continue;
    int a = face_of_dart.at({u, v}), b = face_of_dart.at({v, u});
    if (find(a) == find(b)) throw invalid_embedding("cotree: non-tree edges close a dual cycle");
    root[find(a)] = find(b);
    ct.edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  if (ct.edges.size() + 1 != ct.faces.size()) throw invalid_embedding("cotree: dual graph is not a spanning tree");
  return ct;
}

struct PlanarBandwidthDecomposition {
  TreeDecomposition decomposition;           // node f is face f of the cotree
  std::vector<Vertex> order;                 // global order ≼
  std::vector<std::vector<Vertex>> bag_orders;
  std::vector<int> spans;
  int max_span = 0;
};

inline Vertex default_root(const PlaneTriangulation& pt) {
  return *std::min_element(pt.outer.begin(), pt.outer.end());
}

/// Face bags B_f = P_x ∪ P_y ∪ P_z (root paths of the Lex-BFS tree) over the cotree,
/// with each bag's induced edges measured against ≼.
inline PlanarBandwidthDecomposition planar_bandwidth3_decomposition(const PlaneTriangulation& pt, Vertex r) {
  auto t = lex_bfs(pt, r);
  auto ct = cotree(pt, t);
  PlanarBandwidthDecomposition out{{pt.graph.order(), {}, ct.edges}, t.order, {}, {}, 0};
  for (const Face& f : ct.faces) {
    Bag bag;
    for (Vertex x : f)
      for (Vertex v = x; v != -1; v = t.parent[v]) bag.push_back(v);
    bag = sorted_bag(bag);
    std::vector<Vertex> ordered = bag;
    std::sort(ordered.begin(), ordered.end(), [&](Vertex a, Vertex b) { return t.position[a] < t.position[b]; });
    int span = ordering_span(pt.graph, ordered);
    out.decomposition.bags.push_back(std::move(bag));
    out.bag_orders.push_back(std::move(ordered));
    out.spans.push_back(span);
    out.max_span = std::max(out.max_span, span);
  }
  out.decomposition.normalize();
  return out;
}

inline PlanarBandwidthDecomposition planar_bandwidth3_decomposition(const PlaneTriangulation& pt) {
  return planar_bandwidth3_decomposition(pt, default_root(pt));
}

struct V8Fixture {
  Graph graph;
  std::vector<std::string> labels;          // id -> "1".."4", "1'".."4'"
  PathDecomposition decomposition;          // bags in the stated vertex order
  std::vector<int> spans;                   // span of each bag under its stated order
};

/// V8: the 8-cycle (1,2,3,4,1',2',3',4') plus the chords ii'. Ids follow the cycle order,
/// so 1..4 are 0..3 and 1'..4' are 4..7.
inline Graph v8() {
  std::vector<Edge> edges;
  for (int i = 0; i < 8; ++i) edges.emplace_back(i, (i + 1) % 8);
  for (int i = 0; i < 4; ++i) edges.emplace_back(i, i + 4);
  return Graph(8, edges);
}

inline V8Fixture v8_fixture() {
  V8Fixture fx{v8(), {"1", "2", "3", "4", "1'", "2'", "3'", "4'"}, {8, {}}, {}};
  // {1,2,1',4,4'}, {2,1',2',4,4'}, {2,3,2',4,4'}, {3,2',3',4,4'}
  const std::vector<std::vector<Vertex>> stated = {
      {0, 1, 4, 3, 7}, {1, 4, 5, 3, 7}, {1, 2, 5, 3, 7}, {2, 5, 6, 3, 7}};
  for (const auto& order : stated) {
    fx.decomposition.bags.push_back(order);
    fx.spans.push_back(ordering_span(fx.graph, order));
  }
  return fx;
}

}  // namespace prodstruct
