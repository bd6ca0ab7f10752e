#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "prodstruct/prodstruct.hpp"

namespace {

using namespace prodstruct;
using json = io::json;

enum exit_code { pass = 0, fail = 1, invalid_input = 2 };

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hex64(std::uint64_t x) {
  std::ostringstream out;
  out << std::hex;
  out.width(16);
  out.fill('0');
  out << x;
  return out.str();
}

struct run_context {
  std::vector<std::string> argv;
  std::uint64_t seed = 0;
  bool seed_given = false;
  int threads = 1;
  std::optional<int> max_n;
  std::string out_path;
  std::string witness_path;
  json inputs = json::array();
  json outputs = json::object();
  json files = json::array();

  exact::Options options() const { return {max_n}; }

  std::uint64_t require_seed(const std::string& who) const {
    if (!seed_given) throw precondition_error(who + " is randomized and needs an explicit --seed");
    return seed;
  }

  json load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw format_error("cannot open " + path);
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    inputs.push_back({{"path", path}, {"fnv1a", hex64(fnv1a(bytes))}});
    try {
      return json::parse(bytes);
    } catch (const json::parse_error& e) {
      throw format_error(path + ": " + e.what());
    }
  }

  Graph graph(const std::string& path) { return io::graph_from_json(load(path)); }

  /// Writes to `path` when given, otherwise embeds the value in the report.
  void emit(const std::string& key, const std::string& path, const json& value) {
    if (path.empty()) {
      outputs[key] = value;
      return;
    }
    io::write_file(path, value);
    files.push_back({{"role", key}, {"path", path}});
  }

  void emit(const std::string& key, const json& value) { emit(key, out_path, value); }
  void emit_witness(const json& value) { emit("witness", witness_path, value); }
};

void expect_inputs(const std::vector<std::string>& inputs, std::size_t count, const std::string& usage) {
  if (inputs.size() != count) throw precondition_error("expected " + std::to_string(count) + " input file(s): " + usage);
}

std::vector<Vertex> parse_list(const std::string& text) {
  std::vector<Vertex> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw precondition_error("malformed vertex list '" + text + "'");
    }
  }
  return out;
}

json spans_json(const std::vector<int>& spans) { return json(spans); }

// ---------------------------------------------------------------------------

struct gen_args {
  std::string family;
  int n = 3, m = 2, k = 1, a = 2, b = 2, c = 1, d = 3, p = 1, q = 1;
  std::string sizes = "1,3,4";
  std::string diagonals;
};

int cmd_gen(run_context& ctx, const gen_args& g) {
  const std::string& f = g.family;
  auto bits = [&](std::size_t count) {
    std::vector<bool> out;
    if (g.diagonals.empty()) return out;
    if (g.diagonals.size() != count)
      throw precondition_error("--diagonals needs " + std::to_string(count) + " characters of 0/1");
    for (char ch : g.diagonals) {
      if (ch != '0' && ch != '1') throw precondition_error("--diagonals accepts only 0 and 1");
      out.push_back(ch == '1');
    }
    return out;
  };
  json value;
  if (f == "edgeless") value = io::to_json(edgeless(g.n));
  else if (f == "path") value = io::to_json(path(g.n));
  else if (f == "cycle") value = io::to_json(cycle(g.n));
  else if (f == "complete") value = io::to_json(complete(g.n));
  else if (f == "star") value = io::to_json(star(g.n));
  else if (f == "multipartite") value = io::to_json(complete_multipartite(parse_list(g.sizes)));
  else if (f == "grid2") value = io::to_json(grid2(g.m, g.n));
  else if (f == "grid3") value = io::to_json(grid3(g.a, g.b, g.c));
  else if (f == "hex") {
    std::vector<Diagonal> diagonals;
    for (bool bit : bits(static_cast<std::size_t>((g.n - 1) * (g.n - 1))))
      diagonals.push_back(bit ? Diagonal::nw_se : Diagonal::ne_sw);
    auto h = hex(g.n, diagonals);
    value = io::to_json(h.graph);
    ctx.emit_witness(io::to_json(PathDecomposition{h.graph.order(), h.bag_orders}));
    ctx.outputs["spans"] = spans_json(h.spans);
  } else if (f == "tgrid2") {
    Graph g1 = path(g.m), g2 = path(g.n);
    auto chosen = bits(static_cast<std::size_t>(g1.size() * g2.size()));
    DiagonalRule rule;
    if (!chosen.empty())
      rule = [&](Edge e1, Edge e2) { return !chosen[static_cast<std::size_t>(e1.first * g2.size() + e2.first)]; };
    value = io::to_json(triangulated_grid2(g1, g2, rule));
  } else if (f == "tgrid3") value = io::to_json(triangulated_grid3(g.a, g.b, g.c));
  else if (f == "pyramid") value = io::to_json(pyramid(g.n));
  else if (f == "windmill") value = io::to_json(windmill(g.k));
  else if (f == "flower") value = io::to_json(flower(g.k));
  else if (f == "treedepth-family") {
    auto t = treedepth_family(g.k, g.c);
    value = io::to_json(t.graph);
    ctx.emit_witness({{"parent", t.parent}});
  } else if (f == "separating") {
    auto s = separating_graph(g.c);
    value = io::to_json(s.graph);
    ctx.emit_witness(io::to_json(s.witness));
  } else if (f == "v8") {
    auto fx = v8_fixture();
    value = io::to_json(fx.graph);
    ctx.emit_witness(io::to_json(fx.decomposition));
    ctx.outputs["spans"] = spans_json(fx.spans);
  } else if (f == "stacked") value = io::to_json(stacked_triangulation(g.n, ctx.require_seed("stacked")));
  else if (f == "random-regular") value = io::to_json(random_regular(g.n, g.d, ctx.require_seed("random-regular")));
  else if (f == "tightness") {
    auto t = tightness_example(g.p, g.q, g.m);
    value = io::to_json(t.graph);
    ctx.outputs["embedding_found"] = t.embedding.has_value();
    if (t.embedding) ctx.emit_witness(io::to_json(*t.embedding));
  } else
    throw precondition_error("unknown family '" + f + "'");
  ctx.emit("graph", value);
  return pass;
}

int cmd_product(run_context& ctx, const std::string& op, const std::vector<std::string>& in) {
  expect_inputs(in, 2, "product <op> A.json B.json");
  json value;
  if (op == "dstrong") {
    value = io::to_json(directed_strong(io::digraph_from_json(ctx.load(in[0])), io::digraph_from_json(ctx.load(in[1]))));
  } else {
    Graph a = ctx.graph(in[0]), b = ctx.graph(in[1]);
    if (op == "cartesian") value = io::to_json(cartesian(a, b));
    else if (op == "direct") value = io::to_json(direct(a, b));
    else if (op == "strong") value = io::to_json(strong(a, b));
    else throw precondition_error("unknown product '" + op + "'");
  }
  ctx.emit("product", value);
  return pass;
}

struct embed_args {
  std::string kind;
  std::vector<std::string> inputs;
  int p = 1, q = 1, c = 1, threshold = 1, path_len = 2, a = 0;
  std::optional<int> h;
  std::string v1, ordering;
  bool include_apex = false;
};

int cmd_embed(run_context& ctx, const embed_args& e) {
  const auto& in = e.inputs;
  auto finish = [&](const Graph& guest, const ProductEmbedding& emb) {
    auto check = check_embedding(guest, emb);
    ctx.outputs["valid"] = check.valid;
    if (!check.valid) ctx.outputs["violation"] = check.violation;
    ctx.emit("embedding", io::to_json(emb));
    return check.valid ? pass : fail;
  };
  auto finish_directed = [&](const Graph& guest, const DirectedProductEmbedding& emb) {
    auto check = check_directed_embedding(guest, emb);
    ctx.outputs["valid"] = check.valid;
    if (!check.valid) ctx.outputs["violation"] = check.violation;
    ctx.outputs["indegree"] = {emb.d1.max_indegree(), emb.d2.max_indegree()};
    ctx.emit("embedding", io::to_json(emb));
    return check.valid ? pass : fail;
  };
  if (e.kind == "join-product" || e.kind == "move-apex") {
    expect_inputs(in, 2, e.kind + " A.json B.json");
    Graph a = ctx.graph(in[0]), b = ctx.graph(in[1]);
    if (e.p < 1 || e.q < 1) throw precondition_error(e.kind + ": p and q must be positive");
    if (e.kind == "join-product") return finish(join_product_guest(a, b, e.p, e.q), embed_join_product(a, b, e.p, e.q));
    return finish(move_apex_guest(a, b, e.p, e.q), embed_move_apex(a, b, e.p, e.q));
  }
  if (e.kind == "apex-partition") {
    expect_inputs(in, 1, "apex-partition G.json --v1 LIST");
    Graph g = ctx.graph(in[0]);
    return finish(e.include_apex ? apex(g) : g, embed_apex_partition(g, parse_list(e.v1), e.include_apex));
  }
  if (e.kind == "partition-check") {
    expect_inputs(in, 3, "partition-check G.json P1.json P2.json --c C");
    Graph g = ctx.graph(in[0]);
    auto r = partition_product_check(g, io::partition_from_json(ctx.load(in[1])), io::partition_from_json(ctx.load(in[2])), e.c);
    if (!r.embedding) {
      ctx.outputs["valid"] = false;
      ctx.outputs["violating_parts"] = {r.violation->first, r.violation->second};
      return fail;
    }
    return finish(g, *r.embedding);
  }
  if (e.kind == "degree-partition") {
    expect_inputs(in, 1, "degree-partition G.json --threshold T");
    Graph g = ctx.graph(in[0]);
    auto p = degree_partition(g, e.threshold);
    json degrees = json::array();
    bool ok = true;
    for (const auto& part : p.parts()) {
      int d = induced_subgraph(g, part).max_degree();
      degrees.push_back(d);
      ok = ok && (g.max_degree() > 2 * e.threshold + 1 || d <= e.threshold);
    }
    ctx.outputs["part_max_degree"] = degrees;
    ctx.outputs["valid"] = ok;
    ctx.emit("partition", io::to_json(p));
    return ok ? pass : fail;
  }
  if (e.kind == "apex-fan") {
    expect_inputs(in, 1, "apex-fan H.json --ordering LIST --path-len L --a A");
    Graph h = ctx.graph(in[0]);
    auto order = e.ordering.empty() ? std::vector<Vertex>{} : parse_list(e.ordering);
    if (e.ordering.empty())
      for (Vertex v = 0; v < h.order(); ++v) order.push_back(v);
    auto fan = orient_apex_fan(h, order, e.path_len, e.a);
    return finish_directed(apex_fan_guest(h, e.path_len, e.a), fan.embedding);
  }
  if (e.kind == "glue-directed") {
    expect_inputs(in, 3, "glue-directed G.json TD.json EMBEDDINGS.json");
    Graph g = ctx.graph(in[0]);
    auto td = io::tree_decomposition_from_json(ctx.load(in[1]));
    json list = ctx.load(in[2]);
    if (!list.is_array()) throw format_error(in[2] + ": expected an array of embeddings");
    std::vector<DirectedProductEmbedding> bags;
    for (const auto& x : list) bags.push_back(io::directed_embedding_from_json(x));
    auto r = glue_directed_products(g, td, bags, e.h, ctx.options());
    ctx.outputs["h"] = r.h;
    ctx.outputs["c"] = r.c;
    ctx.outputs["d"] = r.d;
    json tds = json::array();
    for (const auto& t : r.factor_decompositions) tds.push_back(io::to_json(t));
    ctx.emit_witness(tds);
    return finish_directed(g, r.embedding);
  }
  throw precondition_error("unknown embed kind '" + e.kind + "'");
}

struct decomp_args {
  std::string kind;
  std::vector<std::string> inputs;
  std::optional<int> root;
  std::string side;
};

int cmd_decomp(run_context& ctx, const decomp_args& d) {
  const auto& in = d.inputs;
  const std::string& k = d.kind;
  if (k == "planar-lexbfs") {
    expect_inputs(in, 1, "planar-lexbfs PT.json [--root R]");
    auto pt = io::triangulation_from_json(ctx.load(in[0]));
    require_valid_triangulation(pt);
    auto r = planar_bandwidth3_decomposition(pt, d.root.value_or(default_root(pt)));
    ctx.outputs["order"] = r.order;
    ctx.outputs["spans"] = spans_json(r.spans);
    ctx.outputs["max_span"] = r.max_span;
    ctx.emit("decomposition", io::to_json(r.decomposition));
    return r.max_span <= 3 ? pass : fail;
  }
  if (k == "bfs-layering") {
    expect_inputs(in, 1, "bfs-layering G.json --root R");
    ctx.emit("layering", io::to_json(bfs_layering(ctx.graph(in[0]), d.root.value_or(0))));
    return pass;
  }
  if (k == "layering-path") {
    expect_inputs(in, 1, "layering-path LAYERING.json");
    ctx.emit("decomposition", io::to_json(layering_to_path_decomposition(io::layering_from_json(ctx.load(in[0])))));
    return pass;
  }
  if (k == "witness-bandwidth" || k == "witness-partition") {
    expect_inputs(in, 3, k + " G.json LAYERING.json TD.json");
    Graph g = ctx.graph(in[0]);
    auto w = make_layered_witness(g, io::layering_from_json(ctx.load(in[1])),
                                  io::tree_decomposition_from_json(ctx.load(in[2])));
    ctx.outputs["k"] = w.k;
    if (k == "witness-partition") {
      ctx.emit("partition", io::to_json(witness_to_partition(w)));
      return pass;
    }
    auto r = witness_to_bandwidth_decomposition(g, w);
    ctx.outputs["orders"] = r.orders;
    ctx.outputs["spans"] = spans_json(r.spans);
    ctx.outputs["max_span"] = r.max_span;
    ctx.emit("decomposition", io::to_json(r.decomposition));
    return pass;
  }
  if (k == "bipartite-ortho" || k == "bipartite-star") {
    expect_inputs(in, 1, k + " G.json --side LIST");
    Graph g = ctx.graph(in[0]);
    auto side = parse_list(d.side);
    if (k == "bipartite-star") {
      ctx.emit("decomposition", io::to_json(bipartite_star_decomposition(g, side)));
      return pass;
    }
    auto [first, second] = bipartite_orthogonal_paths(g, side);
    ctx.outputs["orthogonality"] = orthogonality(first, second);
    ctx.emit("decompositions", {{"first", io::to_json(first)}, {"second", io::to_json(second)}});
    return pass;
  }
  if (k == "glue-tree-f") {
    expect_inputs(in, 3, "glue-tree-f G.json TD.json TORSO_TDS.json");
    Graph g = ctx.graph(in[0]);
    auto td = io::tree_decomposition_from_json(ctx.load(in[1]));
    json list = ctx.load(in[2]);
    if (!list.is_array()) throw format_error(in[2] + ": expected an array of tree decompositions");
    std::vector<TreeDecomposition> parts;
    for (const auto& x : list) parts.push_back(io::tree_decomposition_from_json(x));
    auto out = glue_tree_f(g, td, parts);
    auto report = validate(g, out);
    ctx.outputs["valid"] = report.valid;
    ctx.outputs["width"] = report.width;
    ctx.emit("decomposition", io::to_json(out));
    return report.valid ? pass : fail;
  }
  if (k == "glue-ortho") {
    expect_inputs(in, 3, "glue-ortho G.json TD.json PAIRS.json");
    Graph g = ctx.graph(in[0]);
    auto td = io::tree_decomposition_from_json(ctx.load(in[1]));
    json list = ctx.load(in[2]);
    if (!list.is_array()) throw format_error(in[2] + ": expected an array of {tree, path} pairs");
    std::vector<std::pair<TreeDecomposition, PathDecomposition>> pairs;
    for (const auto& x : list)
      pairs.emplace_back(io::tree_decomposition_from_json(io::detail::field(x, "tree", "pair")),
                         io::path_decomposition_from_json(io::detail::field(x, "path", "pair")));
    auto out = glue_orthogonal(g, td, pairs);
    bool ok = validate(g, out.tree).valid && validate(g, out.path).valid;
    ctx.outputs["valid"] = ok;
    ctx.outputs["orthogonality"] = orthogonality(out.tree, out.path);
    ctx.emit("decompositions", {{"tree", io::to_json(out.tree)}, {"path", io::to_json(out.path)}});
    return ok ? pass : fail;
  }
  if (k == "project-product") {
    expect_inputs(in, 3, "project-product EMBEDDING.json TD1.json TD2.json");
    auto e = io::embedding_from_json(ctx.load(in[0]));
    auto [first, second] = project_product_decomposition(e, io::tree_decomposition_from_json(ctx.load(in[1])),
                                                         io::tree_decomposition_from_json(ctx.load(in[2])));
    ctx.outputs["orthogonality"] = orthogonality(first, second);
    ctx.emit("decompositions", {{"first", io::to_json(first)}, {"second", io::to_json(second)}});
    return pass;
  }
  throw precondition_error("unknown decomp kind '" + k + "'");
}

struct check_args {
  std::string kind;
  std::vector<std::string> inputs;
  std::optional<int> k;
};

TreeDecomposition any_decomposition(const json& j) {
  if (j.is_object() && j.contains("nodes")) return io::tree_decomposition_from_json(j);
  return io::path_decomposition_from_json(j).to_tree();
}

int cmd_check(run_context& ctx, const check_args& c) {
  const auto& in = c.inputs;
  auto put_report = [&](const DecompositionReport& r) {
    ctx.outputs["valid"] = r.valid;
    ctx.outputs["width"] = r.width;
    ctx.outputs["adhesion"] = r.adhesion;
    ctx.outputs["taut"] = r.taut;
    if (!r.valid) ctx.outputs["violation"] = r.violation;
  };
  if (c.kind == "td" || c.kind == "pd") {
    expect_inputs(in, 2, "check " + c.kind + " G.json DECOMPOSITION.json");
    Graph g = ctx.graph(in[0]);
    json j = ctx.load(in[1]);
    if (c.kind == "td") {
      auto r = validate(g, io::tree_decomposition_from_json(j));
      put_report(r);
      return r.valid ? pass : fail;
    }
    auto pd = io::path_decomposition_from_json(j);
    auto r = validate(g, pd);
    put_report(r);
    std::vector<int> spans;
    for (const auto& bag : pd.bags) spans.push_back(ordering_span(g, bag));
    ctx.outputs["spans"] = spans_json(spans);
    return r.valid ? pass : fail;
  }
  if (c.kind == "ortho") {
    expect_inputs(in, 3, "check ortho G.json D1.json D2.json [--k K]");
    Graph g = ctx.graph(in[0]);
    auto a = any_decomposition(ctx.load(in[1]));
    auto b = any_decomposition(ctx.load(in[2]));
    auto ra = validate(g, a), rb = validate(g, b);
    ctx.outputs["valid"] = {ra.valid, rb.valid};
    if (!ra.valid) ctx.outputs["violation"] = "first: " + ra.violation;
    else if (!rb.valid) ctx.outputs["violation"] = "second: " + rb.violation;
    if (!ra.valid || !rb.valid) return fail;
    int value = orthogonality(a, b);
    ctx.outputs["value"] = value;
    return !c.k || value <= *c.k ? pass : fail;
  }
  if (c.kind == "embedding") {
    expect_inputs(in, 2, "check embedding G.json EMBEDDING.json");
    Graph g = ctx.graph(in[0]);
    json j = ctx.load(in[1]);
    bool directed = j.is_object() && j.contains("factors") && j["factors"].is_array() && !j["factors"].empty() &&
                    j["factors"][0].contains("arcs");
    auto r = directed ? check_directed_embedding(g, io::directed_embedding_from_json(j))
                      : check_embedding(g, io::embedding_from_json(j));
    ctx.outputs["valid"] = r.valid;
    if (!r.valid) ctx.outputs["violation"] = r.violation;
    return r.valid ? pass : fail;
  }
  if (c.kind == "triangulation") {
    expect_inputs(in, 1, "check triangulation PT.json");
    auto pt = io::triangulation_from_json(ctx.load(in[0]));
    try {
      auto fs = faces(pt);
      outer_face_index(pt, fs);
      ctx.outputs["valid"] = true;
      ctx.outputs["faces"] = fs.size();
      return pass;
    } catch (const invalid_embedding& e) {
      ctx.outputs["valid"] = false;
      ctx.outputs["violation"] = e.what();
      return fail;
    }
  }
  throw precondition_error("unknown check kind '" + c.kind + "'");
}

int cmd_exact(run_context& ctx, const std::string& param, const std::vector<std::string>& in, int c) {
  expect_inputs(in, 1, "exact <param> G.json");
  Graph g = ctx.graph(in[0]);
  auto opt = ctx.options();
  json witness;
  int value = 0;
  auto tree_param = [&](exact::Param p) {
    auto r = exact::tree_param_exact(g, p, opt);
    witness = io::to_json(*r.decomposition);
    return r.value;
  };
  if (param == "tw") {
    auto r = exact::treewidth_exact(g, opt);
    value = r.value;
    witness = io::to_json(*r.decomposition);
  } else if (param == "pw") {
    auto r = exact::pathwidth_exact(g, opt);
    value = r.value;
    witness = io::to_json(exact::layout_path_decomposition(g, r.ordering));
  } else if (param == "bw") {
    auto r = exact::bandwidth_exact(g, opt);
    value = r.value;
    witness = {{"ordering", r.ordering}};
  } else if (param == "td") {
    auto r = exact::treedepth_exact(g, opt);
    value = r.value;
    witness = {{"parent", r.parent}};
  } else if (param == "ttw") value = tree_param(exact::Param::tw);
  else if (param == "tpw") value = tree_param(exact::Param::pw);
  else if (param == "tbw") value = tree_param(exact::Param::bw);
  else if (param == "ttd") value = tree_param(exact::Param::td);
  else if (param == "tree-maxdeg") value = tree_param(exact::Param::max_degree);
  else if (param == "tree-longest-path") value = tree_param(exact::Param::longest_path);
  else if (param == "twintw") {
    auto r = exact::twintw_exact(g, opt);
    value = r.value;
    witness = {{"first", io::to_json(r.first)}, {"second", io::to_json(r.second)}};
  } else if (param == "twtw") {
    auto r = exact::twtw_exact(g, c, opt);
    value = r.value;
    witness = {{"first", io::to_json(r.first)}, {"second", io::to_json(r.second)}, {"c", c}};
  } else
    throw precondition_error("unknown parameter '" + param + "'");
  json report = io::report(param, value, witness, ctx.seed_given ? std::optional(ctx.seed) : std::nullopt);
  if (!ctx.out_path.empty()) ctx.emit("report", report);
  ctx.outputs["param"] = param;
  ctx.outputs["value"] = value;
  ctx.outputs["witness"] = witness;
  return pass;
}

struct probe_args {
  std::string kind;
  std::vector<std::string> inputs;
  int n = 40, d = 16, samples = 1000;
};

int cmd_probe(run_context& ctx, const probe_args& p) {
  if (p.kind != "mixing") throw precondition_error("unknown probe kind '" + p.kind + "'");
  std::uint64_t seed = ctx.require_seed("probe mixing");
  Graph g = p.inputs.empty() ? random_regular(p.n, p.d, seed) : ctx.graph(p.inputs.at(0));
  int d = p.inputs.empty() ? p.d : g.max_degree();
  auto r = exact::expander_mixing_check(g, d, p.samples, seed);
  ctx.outputs["n"] = r.n;
  ctx.outputs["d"] = r.d;
  ctx.outputs["set_size"] = r.set_size;
  ctx.outputs["samples"] = r.samples;
  ctx.outputs["failures"] = r.failures;
  ctx.outputs["vacuous"] = r.vacuous;
  return r.failures == 0 ? pass : fail;
}

}  // namespace

int main(int argc, char** argv) {
  run_context ctx;
  for (int i = 0; i < argc; ++i) ctx.argv.emplace_back(argv[i]);

  CLI::App app{"Product structure toolkit: generators, products, decompositions and exact width oracles"};
  app.require_subcommand(1);
  auto* seed_opt = app.add_option("--seed", ctx.seed, "Seed for every randomized step")->capture_default_str();
  app.add_option("--threads", ctx.threads, "Worker threads for oracles")->check(CLI::PositiveNumber);
  app.add_option("--max-n", ctx.max_n, "Override an oracle's vertex cap (up to the hard limit)");
  app.add_option("-o,--out", ctx.out_path, "Output file for the produced value");

  std::function<int()> run;

  gen_args ga;
  auto* gen = app.add_subcommand("gen", "Generate a graph family")->fallthrough();
  gen->add_option("family", ga.family, "edgeless|path|cycle|complete|star|multipartite|grid2|grid3|hex|tgrid2|tgrid3|"
                                       "pyramid|windmill|flower|treedepth-family|separating|v8|stacked|"
                                       "random-regular|tightness")
      ->required();
  gen->add_option("--n", ga.n);
  gen->add_option("--m", ga.m);
  gen->add_option("--k", ga.k);
  gen->add_option("--a", ga.a);
  gen->add_option("--b", ga.b);
  gen->add_option("--c", ga.c);
  gen->add_option("--d", ga.d);
  gen->add_option("--p", ga.p);
  gen->add_option("--q", ga.q);
  gen->add_option("--sizes", ga.sizes, "Part sizes, comma separated");
  gen->add_option("--diagonals", ga.diagonals, "One 0/1 per cell (hex: 1 = NW-SE; tgrid2: 1 = anti-diagonal)");
  gen->add_option("--witness", ctx.witness_path, "Sidecar file for the emitted witness");
  gen->callback([&] { run = [&] { return cmd_gen(ctx, ga); }; });

  std::string product_op;
  std::vector<std::string> product_in;
  auto* product = app.add_subcommand("product", "Graph products")->fallthrough();
  product->add_option("op", product_op, "cartesian|direct|strong|dstrong")->required();
  product->add_option("inputs", product_in)->required();
  product->callback([&] { run = [&] { return cmd_product(ctx, product_op, product_in); }; });

  embed_args ea;
  auto* embed = app.add_subcommand("embed", "Product embeddings")->fallthrough();
  embed->add_option("kind", ea.kind,
                    "join-product|move-apex|apex-partition|partition-check|degree-partition|apex-fan|glue-directed")
      ->required();
  embed->add_option("inputs", ea.inputs);
  embed->add_option("--p", ea.p);
  embed->add_option("--q", ea.q);
  embed->add_option("--c", ea.c);
  embed->add_option("--adhesion", ea.h, "Declared adhesion bound h");
  embed->add_option("--threshold", ea.threshold);
  embed->add_option("--path-len", ea.path_len);
  embed->add_option("--a", ea.a);
  embed->add_option("--v1", ea.v1, "First side, comma separated");
  embed->add_option("--ordering", ea.ordering, "Elimination ordering, comma separated");
  embed->add_flag("--include-apex", ea.include_apex);
  embed->add_option("--witness", ctx.witness_path);
  embed->callback([&] { run = [&] { return cmd_embed(ctx, ea); }; });

  decomp_args da;
  auto* decomp = app.add_subcommand("decomp", "Decomposition constructions")->fallthrough();
  decomp->add_option("kind", da.kind,
                     "planar-lexbfs|bfs-layering|layering-path|witness-bandwidth|witness-partition|bipartite-ortho|"
                     "bipartite-star|glue-tree-f|glue-ortho|project-product")
      ->required();
  decomp->add_option("inputs", da.inputs);
  decomp->add_option("--root", da.root);
  decomp->add_option("--side", da.side, "Bipartition side, comma separated");
  decomp->callback([&] { run = [&] { return cmd_decomp(ctx, da); }; });

  check_args ca;
  auto* check = app.add_subcommand("check", "Validate inputs; exit 0 pass, 1 fail, 2 invalid input")->fallthrough();
  check->add_option("kind", ca.kind, "td|pd|ortho|embedding|triangulation")->required();
  check->add_option("inputs", ca.inputs);
  check->add_option("--k", ca.k, "Orthogonality bound for check ortho");
  check->callback([&] { run = [&] { return cmd_check(ctx, ca); }; });

  std::string exact_param;
  std::vector<std::string> exact_in;
  int exact_c = 1;
  auto* exact_cmd = app.add_subcommand("exact", "Exact width oracles")->fallthrough();
  exact_cmd->add_option("param", exact_param,
                        "tw|pw|bw|td|ttw|tpw|tbw|ttd|tree-maxdeg|tree-longest-path|twintw|twtw")
      ->required();
  exact_cmd->add_option("inputs", exact_in)->required();
  exact_cmd->add_option("--c", exact_c, "Third factor size for twtw");
  exact_cmd->callback([&] { run = [&] { return cmd_exact(ctx, exact_param, exact_in, exact_c); }; });

  probe_args pa;
  auto* probe = app.add_subcommand("probe", "Stochastic probes")->fallthrough();
  probe->add_option("kind", pa.kind, "mixing")->required();
  probe->add_option("inputs", pa.inputs);
  probe->add_option("--n", pa.n);
  probe->add_option("--d", pa.d);
  probe->add_option("--samples", pa.samples);
  probe->callback([&] { run = [&] { return cmd_probe(ctx, pa); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? pass : invalid_input;
  }
  ctx.seed_given = seed_opt->count() > 0;

  const auto start = std::chrono::steady_clock::now();
  int code = pass;
  json error;
  try {
    code = run();
  } catch (const format_error& e) {
    code = invalid_input;
    error = {{"kind", "format"}, {"message", e.what()}};
  } catch (const instance_too_large& e) {
    code = invalid_input;
    error = {{"kind", "size cap"}, {"message", e.what()}};
  } catch (const precondition_error& e) {
    code = invalid_input;
    error = {{"kind", "precondition"}, {"message", e.what()}};
  }
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  json report = {{"command", ctx.argv},
                 {"inputs", ctx.inputs},
                 {"outputs", ctx.outputs},
                 {"files", ctx.files},
                 {"seed", ctx.seed_given ? json(ctx.seed) : json(nullptr)},
                 {"threads", ctx.threads},
                 {"exit_code", code},
                 {"wall_time_s", wall}};
  if (!error.is_null()) {
    report["error"] = error;
    std::cerr << "error: " << error["message"].get<std::string>() << '\n';
  }
  std::cout << report.dump() << '\n';
  return code;
}
