// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "brute.hpp"
#include "prodstruct/prodstruct.hpp"

using namespace prodstruct;

namespace {

int failures = 0;

void verdict(int id, bool ok, const std::string& what) {
  std::printf("[%s] criterion %2d: %s\n", ok ? "PASS" : "FAIL", id, what.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

void note(const std::string& what) {
  std::printf("       note: %s\n", what.c_str());
  std::fflush(stdout);
}

template <class... Args>
std::string fmt(const char* f, Args... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Graph random_graph(SplitMix64& rng, int n, int percent) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (static_cast<int>(rng.below(100)) < percent) e.emplace_back(u, v);
  return Graph(n, e);
}

Graph random_tree(SplitMix64& rng, int n) {
  std::vector<Edge> e;
  for (int v = 1; v < n; ++v) e.emplace_back(static_cast<int>(rng.below(v)), v);
  return Graph(n, e);
}

/// Random graph with maximum degree <= cap: random edge attempts that respect the cap.
Graph random_bounded_degree(SplitMix64& rng, int n, int cap) {
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  std::vector<Edge> e;
  std::set<Edge> seen;
  for (int t = 0; t < 3 * n; ++t) {
    int u = static_cast<int>(rng.below(n)), v = static_cast<int>(rng.below(n));
    if (u == v || deg[u] >= cap || deg[v] >= cap) continue;
    Edge key{std::min(u, v), std::max(u, v)};
    if (!seen.insert(key).second) continue;
    ++deg[u], ++deg[v];
    e.push_back(key);
  }
  return Graph(n, e);
}

struct PastedHost {
  Graph graph;
  TreeDecomposition td;
  std::vector<int> colour;  // proper 2-colouring of every bag (bipartite hosts only)
};

/// Clique-pastes up to `max_bags` bags of at most 4 vertices along adhesions of size <= 2.
/// With `bipartite`, every bag is bipartite with respect to `colour`.
PastedHost pasted_host(SplitMix64& rng, int max_bags, bool bipartite) {
  std::vector<Edge> edges;
  std::set<Edge> have;
  std::vector<int> colour;
  PastedHost out;
  auto add_edge = [&](Vertex u, Vertex v) {
    Edge key{std::min(u, v), std::max(u, v)};
    if (have.insert(key).second) edges.push_back(key);
  };
  int n = 0;
  const int bags = 1 + static_cast<int>(rng.below(max_bags));
  for (int t = 0; t < bags; ++t) {
    Bag shared;
    int parent = -1;
    if (t > 0) {
      parent = static_cast<int>(rng.below(t));
      const Bag& pb = out.td.bags[parent];
      int want = static_cast<int>(rng.below(3));
      if (want >= 1) shared.push_back(pb[rng.below(pb.size())]);
      if (want == 2) {
        std::vector<Vertex> nbrs;
        for (Vertex w : pb)
          if (w != shared[0] && have.count({std::min(w, shared[0]), std::max(w, shared[0])})) nbrs.push_back(w);
        if (!nbrs.empty()) shared.push_back(nbrs[rng.below(nbrs.size())]);
      }
    }
    int fresh = 1 + static_cast<int>(rng.below(4 - shared.size()));
    Bag bag = shared;
    for (int i = 0; i < fresh; ++i) {
      bag.push_back(n++);
      colour.push_back(static_cast<int>(rng.below(2)));
    }
    if (t == 0 && bag.size() >= 2 && bipartite) colour[bag[1]] = 1 - colour[bag[0]];
    for (std::size_t i = 0; i < bag.size(); ++i)
      for (std::size_t j = i + 1; j < bag.size(); ++j) {
        bool both_shared = i < shared.size() && j < shared.size();
        if (both_shared) continue;
        if (bipartite && colour[bag[i]] == colour[bag[j]]) continue;
        if (rng.below(100) < 65) add_edge(bag[i], bag[j]);
      }
    out.td.bags.push_back(sorted_bag(bag));
    if (parent >= 0) out.td.tree_edges.emplace_back(parent, t);
  }
  out.graph = Graph(n, edges);
  out.td.host_n = n;
  out.td.normalize();
  out.colour = colour;
  return out;
}

DirectedProductEmbedding diagonal(const Graph& g) {
  DirectedProductEmbedding e{bidirected(g), Digraph(1), {}};
  for (Vertex v = 0; v < g.order(); ++v) e.map.emplace_back(v, 0);
  return e;
}

const exact::Options wide{exact::hard_limit};

// ---------------------------------------------------------------------------

void criterion_1() {
  SplitMix64 rng(1001);
  int bad_count = 0, bad_union = 0;
  for (int t = 0; t < 50; ++t) {
    Graph a = random_graph(rng, 1 + static_cast<int>(rng.below(8)), static_cast<int>(rng.below(101)));
    Graph b = random_graph(rng, 1 + static_cast<int>(rng.below(8)), static_cast<int>(rng.below(101)));
    const std::size_t va = a.order(), vb = b.order(), ea = a.size(), eb = b.size();
    Graph s = strong(a, b);
    if (s.size() != va * eb + vb * ea + 2 * ea * eb) ++bad_count;
    std::set<Edge> un;
    for (auto e : cartesian(a, b).edges()) un.insert(e);
    for (auto e : direct(a, b).edges()) un.insert(e);
    if (std::vector<Edge>(un.begin(), un.end()) != s.edges()) ++bad_union;
  }
  verdict(1, bad_count == 0 && bad_union == 0,
          fmt("strong product edge count and union identity over 50 pairs (violations %d, %d)", bad_count, bad_union));
}

void criterion_2() {
  std::vector<Graph> corpus = {
      Graph(1), Graph(2), path(2), Graph(3), path(3), complete(3), path(4), cycle(4), star(3), complete(4),
      Graph(4, {{0, 1}, {2, 3}}), Graph(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}}), path(5), cycle(5), star(4),
      complete(5), complete_bipartite(2, 3), Graph(5, {{0, 1}, {1, 2}, {3, 4}}), apex(cycle(4)),
      Graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {2, 4}})};
  int checked = 0, bad = 0;
  for (const Graph& a : corpus)
    for (const Graph& b : corpus)
      for (int p = 1; p <= 3; ++p)
        for (int q = 1; q <= 3; ++q) {
          checked += 2;
          if (!check_embedding(join_product_guest(a, b, p, q), embed_join_product(a, b, p, q))) ++bad;
          if (!check_embedding(move_apex_guest(a, b, p, q), embed_move_apex(a, b, p, q))) ++bad;
        }
  Graph host = strong(star(3), star(4));
  auto phi = subgraph_contained(complete_multipartite({1, 3, 4}), host);
  bool star_star = phi && is_subgraph_map(complete_multipartite({1, 3, 4}), host, *phi);
  verdict(2, bad == 0 && star_star,
          fmt("join lemmas: %d/%d embeddings valid over a %zu-graph corpus; K_{1,3,4} in K_{1,3} x K_{1,4}: %s",
              checked - bad, checked, corpus.size(), star_star ? "found" : "missing"));
}

void criterion_3() {
  int invalid = 0, worst = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    int n = 4 + static_cast<int>(seed % 37);
    auto pt = stacked_triangulation(n, 3000 + seed);
    auto d = planar_bandwidth3_decomposition(pt);
    if (!validate(pt.graph, d.decomposition)) ++invalid;
    worst = std::max(worst, d.max_span);
  }
  int tbw_k4 = exact::tree_param_exact(complete(4), exact::Param::bw).value;
  verdict(3, invalid == 0 && worst <= 3 && tbw_k4 == 3,
          fmt("planar Lex-BFS decompositions: %d invalid of 100, max bag span %d (<= 3); tbw(K4) = %d", invalid, worst,
              tbw_k4));
}

void criterion_4() {
  auto fx = v8_fixture();
  auto r = validate(fx.graph, fx.decomposition);
  int worst = *std::max_element(fx.spans.begin(), fx.spans.end());
  std::ostringstream spans;
  for (int s : fx.spans) spans << s << ' ';
  verdict(4, r.valid && worst <= 3,
          fmt("V8 bags %s as a path decomposition; spans under the stated orders: %s(max %d, need <= 3)",
              r.valid ? "validate" : "do not validate", spans.str().c_str(), worst));
  if (worst > 3) {
    int best = 0;
    for (const auto& bag : fx.decomposition.bags)
      best = std::max(best, exact::bandwidth_exact(induced_subgraph(fx.graph, sorted_bag(bag))).value);
    note(fmt("bag {1,2,1',4,4'} in the stated order puts 1 and 4' four apart; exact per-bag bandwidth is at most %d",
             best));
  }
}

void criterion_5() {
  using exact::Param;
  std::map<std::string, int> violations;
  const char* names[] = {"tw<=pw", "pw<=bw", "pw<=td-1", "ttw<=tpw", "tpw<=tbw", "ttw+1<=TwIntTw",
                         "TwIntTw<=(twtw+1)^2", "tw+1<=ceil((ttw+n-1)/2)"};
  for (const char* name : names) violations[name] = 0;
  int proven_form = 0, graphs = 0;
  Graph first_literal;
  bool have_literal = false;
  auto check = [&](const Graph& g) {
    ++graphs;
    const int n = g.order();
    int tw = exact::treewidth_exact(g).value, pw = exact::pathwidth_exact(g).value;
    int bw = exact::bandwidth_exact(g).value, td = exact::treedepth_exact(g).value;
    int ttw = exact::tree_param_exact(g, Param::tw).value, tpw = exact::tree_param_exact(g, Param::pw).value;
    int tbw = exact::tree_param_exact(g, Param::bw).value;
    int twintw = exact::twintw_exact(g).value, twtw = exact::twtw_exact(g).value;
    int k = (ttw + n - 1 + 1) / 2;
    violations["tw<=pw"] += !(tw <= pw);
    violations["pw<=bw"] += !(pw <= bw);
    violations["pw<=td-1"] += !(pw <= td - 1);
    violations["ttw<=tpw"] += !(ttw <= tpw);
    violations["tpw<=tbw"] += !(tpw <= tbw);
    violations["ttw+1<=TwIntTw"] += !(ttw + 1 <= twintw);
    violations["TwIntTw<=(twtw+1)^2"] += !(twintw <= (twtw + 1) * (twtw + 1));
    if (!(tw + 1 <= k)) {
      ++violations["tw+1<=ceil((ttw+n-1)/2)"];
      if (!have_literal) first_literal = g, have_literal = true;
    }
    proven_form += !(tw <= k);
  };
  const auto start = std::chrono::steady_clock::now();
  bool shrunk = false;
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : brute::connected_graphs(n)) check(g);
  auto six = brute::connected_graphs(6);
  for (const Graph& g : six) {
    if (std::chrono::steady_clock::now() - start > std::chrono::minutes(5)) {
      shrunk = true;
      break;
    }
    check(g);
  }
  if (shrunk) {
    SplitMix64 rng(5005);
    for (int i = 0; i < 100; ++i) check(six[rng.below(six.size())]);
  }
  int total = 0;
  std::ostringstream detail;
  for (const char* name : names) {
    total += violations[name];
    if (violations[name]) detail << ' ' << name << '=' << violations[name];
  }
  verdict(5, total == 0,
          fmt("oracle inequalities over %d connected graphs (n <= 6%s): %d violations%s", graphs,
              shrunk ? ", n = 6 sampled" : "", total, detail.str().c_str()));
  if (have_literal)
    note(fmt("first violation of tw+1 <= ceil((ttw+n-1)/2): n = %d, m = %zu; every K_n violates it "
             "(tw+1 = n, bound n-1). The weaker tw <= ceil((ttw+n-1)/2) has %d violations.",
             first_literal.order(), first_literal.size(), proven_form));
}

void criterion_6() {
  using exact::Param;
  int ttw_k4 = exact::tree_param_exact(complete(4), Param::tw).value;
  int ttw_k33 = exact::tree_param_exact(complete_bipartite(3, 3), Param::tw).value;
  int twtw_c5 = exact::twtw_exact(cycle(5)).value;
  int twtw_k33 = exact::twtw_exact(complete_bipartite(3, 3)).value;
  int twintw_k3 = exact::twintw_exact(complete(3)).value;
  int td_p5 = exact::treedepth_exact(path(5)).value;
  int td_p5_brute = brute::treedepth(path(5));
  bool ok = ttw_k4 == 3 && ttw_k33 == 1 && twtw_c5 == 1 && twtw_k33 == 1 && twintw_k3 == 3 && td_p5 == 3 &&
            td_p5_brute == 3;
  verdict(6, ok,
          fmt("ttw(K4)=%d ttw(K33)=%d twtw(C5)=%d twtw(K33)=%d TwIntTw(K3)=%d td(P5)=%d (definition %d, ceil(log2 6)=3)",
              ttw_k4, ttw_k33, twtw_c5, twtw_k33, twintw_k3, td_p5, td_p5_brute));
}

void criterion_7() {
  int v = exact::tree_param_exact(pyramid(2), exact::Param::max_degree).value;
  verdict(7, v >= 3, fmt("tree-max-degree(pyramid(2)) = %d (need >= 3)", v));
  int v3 = exact::tree_param_exact(pyramid(3), exact::Param::max_degree, {10}).value;
  note(fmt("extended run: tree-max-degree(pyramid(3)) = %d (lower bound 4 %s)", v3, v3 >= 4 ? "holds" : "fails"));
}

void criterion_8() {
  int true_count = 0;
  for (int mask = 0; mask < 16; ++mask) {
    std::vector<Diagonal> d;
    for (int i = 0; i < 4; ++i) d.push_back(mask >> i & 1 ? Diagonal::nw_se : Diagonal::ne_sw);
    true_count += exact::hex_bag_path_check(hex(3, d).graph, 3);
  }
  int agree = 0, cases = 0;
  for (int n = 1; n <= 2; ++n)
    for (int mask = 0; mask < (n == 2 ? 2 : 1); ++mask) {
      Graph g = n == 1 ? Graph(1) : hex(2, {mask ? Diagonal::nw_se : Diagonal::ne_sw}).graph;
      ++cases;
      agree += exact::hex_bag_path_check(g, n) == exact::hex_bag_path_check_raw(g, n);
    }
  verdict(8, true_count == 16 && agree == cases,
          fmt("Hex bag-path check true on %d/16 diagonal assignments of the 3x3 board; raw verdict agrees on %d/%d",
              true_count, agree, cases));
}

void criterion_9() {
  auto s = separating_graph(1);
  auto r = validate(s.graph, s.witness);
  int td = exact::max_bag_param(s.graph, s.witness, exact::Param::td);
  int twintw = exact::twintw_exact(s.graph).value;
  verdict(9, r.valid && td <= 4 && twintw == 3,
          fmt("separating_graph(1): witness %s, per-bag td %d (<= 4); TwIntTw = %d (need 3)",
              r.valid ? "valid" : "invalid", td, twintw));
  if (twintw != 3)
    note(fmt("separating_graph(1) is the path on 3 vertices (one 1x1 grid joined to both hub vertices); its TwIntTw "
             "is %d, which still exceeds 1",
             twintw));
}

void criterion_10() {
  SplitMix64 rng(1010);
  int bad = 0;
  int worst_deg[2] = {0, 0}, worst_pw[2] = {0, 0};
  for (int variant = 0; variant < 2; ++variant) {
    const int cap = 3 + variant, threshold = 1 + variant;
    for (int t = 0; t < 50; ++t) {
      Graph g = random_bounded_degree(rng, 4 + static_cast<int>(rng.below(17)), cap);
      auto p = degree_partition(g, threshold);
      for (const auto& part : p.parts()) {
        int d = induced_subgraph(g, part).max_degree();
        worst_deg[variant] = std::max(worst_deg[variant], d);
        if (d > threshold) ++bad;
      }
      auto e = embed_apex_partition(g, p.parts()[0], true);
      if (!check_embedding(apex(g), e)) ++bad;
      for (const Graph& f : e.factors) {
        int pw = exact::pathwidth_exact(f, wide).value;
        worst_pw[variant] = std::max(worst_pw[variant], pw);
        if (pw > threshold + 1) ++bad;
      }
    }
  }
  verdict(10, bad == 0,
          fmt("degree partitions: Delta<=3 gives part degree %d, factor pw %d; Delta<=4 gives part degree %d, factor pw "
              "%d; %d violations",
              worst_deg[0], worst_pw[0], worst_deg[1], worst_pw[1], bad));
}

void criterion_11() {
  SplitMix64 rng(1111);
  int bad = 0, max_h = 0;
  for (int t = 0; t < 30; ++t) {
    auto host = pasted_host(rng, 5, false);
    std::vector<DirectedProductEmbedding> embs;
    for (const auto& bag : host.td.bags) embs.push_back(diagonal(induced_subgraph(host.graph, bag)));
    auto r = glue_directed_products(host.graph, host.td, embs, std::nullopt, wide);
    max_h = std::max(max_h, r.h);
    if (!check_directed_embedding(host.graph, r.embedding)) ++bad;
    for (int i = 0; i < 2; ++i) {
      const Digraph& d = i == 0 ? r.embedding.d1 : r.embedding.d2;
      if (d.max_indegree() > r.d[i] + r.h) ++bad;
      if (exact::treewidth_exact(underlying(d), wide).value > r.c[i] + r.h) ++bad;
      if (!validate(underlying(d), r.factor_decompositions[i])) ++bad;
    }
  }
  verdict(11, bad == 0, fmt("directed gluing over 30 pasted hosts (max adhesion %d): %d violations", max_h, bad));
}

void criterion_12() {
  SplitMix64 rng(1212);
  int invalid = 0, worst = 0, over = 0, max_h = 0;
  for (int t = 0; t < 30; ++t) {
    auto host = pasted_host(rng, 5, true);
    max_h = std::max(max_h, validate(host.graph, host.td).adhesion);
    std::vector<std::pair<TreeDecomposition, PathDecomposition>> pairs;
    for (const auto& bag : host.td.bags) {
      Graph local = induced_subgraph(host.graph, bag);
      std::vector<Vertex> side;
      for (int i = 0; i < static_cast<int>(bag.size()); ++i)
        if (host.colour[bag[i]] == 0) side.push_back(i);
      auto [a, b] = bipartite_orthogonal_paths(local, side);
      pairs.emplace_back(a.to_tree(), b);
    }
    auto out = glue_orthogonal(host.graph, host.td, pairs);
    if (!validate(host.graph, out.tree) || !validate(host.graph, out.path)) ++invalid;
    int k = orthogonality(out.tree, out.path);
    worst = std::max(worst, k);
    over += k > 2;
  }
  verdict(12, invalid == 0 && over == 0,
          fmt("orthogonal gluing over 30 bipartite pasted hosts (max adhesion %d): %d invalid, %d above 2-orthogonal "
              "(max %d)",
              max_h, invalid, over, worst));
}

void criterion_13() {
  SplitMix64 rng(1313);
  int bad = 0, worst_ratio_hits = 0;
  for (int t = 0; t < 30; ++t) {
    Graph t1 = random_tree(rng, 2 + static_cast<int>(rng.below(7)));
    Graph t2 = random_tree(rng, 2 + static_cast<int>(rng.below(7)));
    Graph host = strong(t1, t2);
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < host.order(); ++v)
      if (rng.below(100) < 70) keep.push_back(v);
    if (keep.empty()) keep.push_back(0);
    std::vector<int> local(static_cast<std::size_t>(host.order()), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) local[keep[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (auto [u, v] : host.edges())
      if (local[u] >= 0 && local[v] >= 0 && rng.below(100) < 80) edges.emplace_back(local[u], local[v]);
    Graph guest(static_cast<int>(keep.size()), edges);
    ProductEmbedding e{{t1, t2}, std::nullopt, {}};
    for (Vertex v : keep) e.map.push_back({v / t2.order(), v % t2.order()});
    if (!check_embedding(guest, e)) ++bad;
    auto d1 = *exact::treewidth_exact(t1).decomposition, d2 = *exact::treewidth_exact(t2).decomposition;
    int w1 = validate(t1, d1).width, w2 = validate(t2, d2).width;
    auto [a, b] = project_product_decomposition(e, d1, d2);
    if (!validate(guest, a) || !validate(guest, b)) ++bad;
    int k = orthogonality(a, b);
    if (k > (w1 + 1) * (w2 + 1)) ++bad;
    worst_ratio_hits += k == (w1 + 1) * (w2 + 1);
  }
  verdict(13, bad == 0,
          fmt("projected decompositions of 30 subgraphs of tree products: %d violations (%d attain the bound)", bad,
              worst_ratio_hits));
}

void criterion_14() {
  int total = 0, seeds_failing = 0, s = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Graph g = random_regular(40, 16, 1400 + seed);
    auto r = exact::expander_mixing_check(g, 16, 1000, 7000 + seed);
    s = r.set_size;
    total += r.failures;
    seeds_failing += r.failures > 0;
  }
  verdict(14, total == 0,
          fmt("isoperimetry sample: 10 random 16-regular graphs on 40 vertices, |S| = |T| = %d, 1000 pairs each: %d "
              "pairs without a crossing edge",
              s, total));
  if (total == 1) note("a single failure: re-examine before accepting");
}

void criterion_15() {
  auto ex = tightness_example(1, 1, 2);
  int tw = exact::treewidth_exact(ex.graph).value;
  bool embedded = ex.embedding && check_embedding(ex.graph, *ex.embedding);
  verdict(15, tw == 3 && embedded,
          fmt("tw(K_{1,2,2}) = %d (m+pq = 3); embedding into K_{1,2} x K_{1,2} %s", tw,
              embedded ? "validates" : "missing or invalid"));
}

}  // namespace

int main() {
  const std::vector<std::function<void()>> criteria = {criterion_1,  criterion_2,  criterion_3,  criterion_4,
                                                       criterion_5,  criterion_6,  criterion_7,  criterion_8,
                                                       criterion_9,  criterion_10, criterion_11, criterion_12,
                                                       criterion_13, criterion_14, criterion_15};
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    try {
      criteria[i]();
    } catch (const std::exception& e) {
      verdict(static_cast<int>(i + 1), false, std::string("threw: ") + e.what());
    }
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
