#include <gtest/gtest.h>

#include "brute.hpp"
#include "prodstruct/prodstruct.hpp"

using namespace prodstruct;

TEST(Graph, RejectsSelfLoopsAndCollapsesDuplicates) {
  EXPECT_THROW(Graph(3, {{1, 1}}), precondition_error);
  EXPECT_THROW(Graph(3, {{0, 3}}), precondition_error);
  Graph g(3, {{0, 1}, {1, 0}, {1, 2}});
  EXPECT_EQ(g.size(), 2u);
  EXPECT_TRUE(g.adjacent(1, 0));
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
}

TEST(Digraph, AntiparallelArcsAndIndegree) {
  Digraph d(3, {{0, 1}, {1, 0}, {2, 1}});
  EXPECT_EQ(d.arc_count(), 3u);
  EXPECT_EQ(d.indegree(1), 2);
  EXPECT_EQ(d.max_indegree(), 2);
  EXPECT_THROW(Digraph(2, {{1, 1}}), precondition_error);
}

TEST(VertexPartition, RejectsOverlapGapsAndEmptyParts) {
  EXPECT_THROW(VertexPartition(3, {{0, 1}, {1, 2}}), invalid_partition);
  EXPECT_THROW(VertexPartition(3, {{0, 1}}), invalid_partition);
  EXPECT_THROW(VertexPartition(2, {{0, 1}, {}}), invalid_partition);
  std::vector<int> labels{5, 7, 5};
  auto p = VertexPartition::from_labels(labels);
  EXPECT_EQ(p.part_count(), 2);
  EXPECT_EQ(p.part_of(2), 0);
}

TEST(CompleteJoin, Examples) {
  EXPECT_EQ(complete_join(Graph(1), Graph(1)), complete(2));
  EXPECT_EQ(complete_join(path(2), Graph(1)), complete(3));
  auto j = complete_join(path(3), complete(2));
  EXPECT_EQ(exact::treewidth_exact(j).value, 3);
  EXPECT_EQ(exact::treewidth_exact(j).value, exact::treewidth_exact(path(3)).value + 2);
}

TEST(CompleteJoin, EdgeCountIdentity) {
  SplitMix64 rng(11);
  for (int t = 0; t < 20; ++t) {
    int na = 1 + static_cast<int>(rng.below(6)), nb = 1 + static_cast<int>(rng.below(6));
    std::vector<Edge> ea, eb;
    for (int u = 0; u < na; ++u)
      for (int v = u + 1; v < na; ++v)
        if (rng.coin(0.5)) ea.emplace_back(u, v);
    for (int u = 0; u < nb; ++u)
      for (int v = u + 1; v < nb; ++v)
        if (rng.coin(0.5)) eb.emplace_back(u, v);
    Graph a(na, ea), b(nb, eb);
    EXPECT_EQ(complete_join(a, b).size(), a.size() + b.size() + static_cast<std::size_t>(na * nb));
  }
}

TEST(Apex, Examples) {
  EXPECT_EQ(apex(Graph(0)), complete(1));
  EXPECT_EQ(apex(complete(2)), complete(3));
  Graph w4 = apex(cycle(4));
  EXPECT_EQ(w4.degree(4), 4);
  EXPECT_EQ(exact::treewidth_exact(w4).value, 3);
  EXPECT_EQ(brute::treewidth(w4), 3);
}

TEST(Quotient, Examples) {
  Graph g = cycle(6);
  EXPECT_EQ(brute::canonical(quotient(g, VertexPartition::singletons(6))), brute::canonical(g));
  EXPECT_EQ(quotient(g, VertexPartition(6, {{0, 1, 2, 3, 4, 5}})), complete(1));
  EXPECT_EQ(quotient(g, VertexPartition(6, {{0, 3}, {1, 4}, {2, 5}})), complete(3));
  EXPECT_THROW(quotient(g, VertexPartition(5, {{0, 1, 2, 3, 4}})), invalid_partition);
}

TEST(CliquePaste, Examples) {
  std::vector<Vertex> v0{0}, tri{0, 1, 2}, none;
  Graph bowtie = clique_paste(complete(3), v0, complete(3), v0);
  EXPECT_EQ(bowtie.order(), 5);
  EXPECT_EQ(bowtie.size(), 6u);
  Graph k4k4 = clique_paste(complete(4), tri, complete(4), tri);
  EXPECT_EQ(k4k4.order(), 5);
  EXPECT_EQ(k4k4.size(), 9u);
  Graph c5 = cycle(5);
  EXPECT_EQ(clique_paste(c5, none, c5, none), disjoint_union(c5, c5));
  std::vector<Vertex> non_clique{0, 2}, pair{0, 1};
  EXPECT_THROW(clique_paste(c5, non_clique, c5, pair), precondition_error);
  EXPECT_THROW(clique_paste(c5, v0, c5, pair), precondition_error);
  EXPECT_TRUE(subgraph_contained(complete(4), k4k4));
  EXPECT_TRUE(subgraph_contained(complete(3), bowtie));
}

TEST(SubgraphContained, Examples) {
  EXPECT_TRUE(subgraph_contained(complete(3), complete(4)));
  EXPECT_FALSE(subgraph_contained(complete(4), complete_bipartite(3, 3)));
  Graph host = strong(star(3), star(4));
  auto phi = subgraph_contained(complete_multipartite({1, 3, 4}), host);
  ASSERT_TRUE(phi);
  EXPECT_TRUE(is_subgraph_map(complete_multipartite({1, 3, 4}), host, *phi));
}

TEST(SubgraphContained, AgreesWithNaiveSearch) {
  SplitMix64 rng(5);
  for (int t = 0; t < 120; ++t) {
    int nh = 2 + static_cast<int>(rng.below(4)), ng = nh + static_cast<int>(rng.below(8 - nh));
    auto random_graph = [&](int n, int percent) {
      std::vector<Edge> e;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (static_cast<int>(rng.below(100)) < percent) e.emplace_back(u, v);
      return Graph(n, e);
    };
    Graph h = random_graph(nh, 50), g = random_graph(ng, 55);
    auto phi = subgraph_contained(h, g);
    EXPECT_EQ(phi.has_value(), brute::contains(h, g)) << "trial " << t;
    if (phi) {
      EXPECT_TRUE(is_subgraph_map(h, g, *phi));
    }
  }
}

TEST(Underlying, Examples) {
  EXPECT_EQ(underlying(bidirected(path(3))), path(3));
  EXPECT_EQ(underlying(Digraph(2, {{0, 1}})), complete(2));
  EXPECT_EQ(underlying(Digraph(3, {{0, 1}, {1, 2}, {2, 0}})), cycle(3));
}

TEST(InducedSubgraph, KeepsGivenOrder) {
  std::vector<Vertex> vs{3, 1, 0};
  Graph h = induced_subgraph(path(4), vs);
  EXPECT_EQ(h, Graph(3, {{1, 2}}));
}

TEST(Distances, BfsAndComponents) {
  auto d = bfs_distances(path(4), 0);
  EXPECT_EQ(d, (std::vector<int>{0, 1, 2, 3}));
  Graph g = disjoint_union(path(2), path(3));
  EXPECT_FALSE(is_connected(g));
  auto comp = component_labels(g);
  EXPECT_EQ(comp[0], comp[1]);
  EXPECT_NE(comp[1], comp[2]);
}
