#include <gtest/gtest.h>

#include <random>

#include "capcolor/dimacs.hpp"
#include "capcolor/generators.hpp"
#include "capcolor/graph.hpp"
#include "test_support.hpp"

namespace capcolor {
namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::ParseError;
}

TEST(Graph, FromEdgeListPath) {
  auto g = Graph::from_edge_list(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(g.n(), 3u);
  EXPECT_EQ(g.m(), 2u);
  EXPECT_TRUE(g.adjacent(0, 1));
  EXPECT_TRUE(g.adjacent(2, 1));
  EXPECT_FALSE(g.adjacent(0, 2));
  EXPECT_EQ(g.degree(1), 2u);
}

TEST(Graph, FromEdgeListCycle) {
  auto g = Graph::from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  EXPECT_EQ(g.m(), 5u);
  for (Vertex v = 0; v < 5; ++v) EXPECT_EQ(g.degree(v), 2u);
  EXPECT_EQ(g, gen::cycle(5));
}

TEST(Graph, FromEdgeListErrors) {
  EXPECT_EQ(kind_of([] { Graph::from_edge_list(2, {{0, 0}}); }), ErrorKind::InvalidEdge);
  EXPECT_EQ(kind_of([] { Graph::from_edge_list(2, {{0, 1}, {1, 0}}); }), ErrorKind::DuplicateEdge);
  EXPECT_EQ(kind_of([] { Graph::from_edge_list(2, {{0, 2}}); }), ErrorKind::InvalidVertex);
}

TEST(Graph, NeighborListsSortedAndAgreeWithAdjacency) {
  std::mt19937_64 rng(7);
  auto g = testing::random_graph(30, 0.3, rng);
  for (Vertex u = 0; u < g.n(); ++u) {
    auto nb = g.neighbors(u);
    EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
    for (Vertex v = 0; v < g.n(); ++v) {
      bool listed = std::binary_search(nb.begin(), nb.end(), v);
      EXPECT_EQ(listed, g.adjacent(u, v));
      EXPECT_EQ(g.adjacent(u, v), g.adjacent(v, u));
    }
  }
}

TEST(Graph, LargeGraphsUseListAdjacency) {
  const std::size_t n = Graph::kDenseLimit + 5;
  std::vector<Edge> edges{{0, static_cast<Vertex>(n - 1)}, {3, 4}};
  auto g = Graph::from_edge_list(n, edges);
  EXPECT_TRUE(g.adjacent(n - 1, 0));
  EXPECT_TRUE(g.adjacent(4, 3));
  EXPECT_FALSE(g.adjacent(0, 3));
}

TEST(Dimacs, ParsePath) {
  auto g = parse_dimacs("p edge 3 2\ne 1 2\ne 2 3");
  EXPECT_EQ(g, testing::path_graph(3));
}

TEST(Dimacs, ParseCycleWithComments) {
  auto g = parse_dimacs("c a five-hole\np edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n");
  EXPECT_EQ(g, gen::cycle(5));
}

TEST(Dimacs, ParseErrors) {
  EXPECT_EQ(kind_of([] { parse_dimacs("p edge 2 2\ne 1 2\ne 1 2"); }), ErrorKind::DuplicateEdge);
  EXPECT_EQ(kind_of([] { parse_dimacs("p edge 2 2\ne 1 2\ne 2 1"); }), ErrorKind::DuplicateEdge);
  EXPECT_EQ(kind_of([] { parse_dimacs("p edge 2 1\ne 1 1"); }), ErrorKind::InvalidEdge);
  EXPECT_EQ(kind_of([] { parse_dimacs("p edge 2 1\ne 1 3"); }), ErrorKind::InvalidVertex);
  EXPECT_EQ(kind_of([] { parse_dimacs("p edge 3 3\ne 1 2\ne 2 3"); }), ErrorKind::CountMismatch);
  EXPECT_EQ(kind_of([] { parse_dimacs("e 1 2\n"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { parse_dimacs(""); }), ErrorKind::ParseError);
}

TEST(Dimacs, ParseErrorCarriesLineNumber) {
  try {
    parse_dimacs("c header\np edge 3 2\ne 1 2\ne 2 x\n");
    FAIL() << "expected ParseError";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
    EXPECT_EQ(e.line(), 4u);
  }
}

TEST(Dimacs, WriteCanonical) {
  EXPECT_EQ(write_dimacs(gen::cycle(5)), "p edge 5 5\ne 1 2\ne 1 5\ne 2 3\ne 3 4\ne 4 5\n");
  EXPECT_EQ(write_dimacs(Graph{}), "p edge 0 0\n");
}

// parse(write(g)) == g, and a second write is byte-identical.
TEST(Dimacs, RoundTripProperty) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    auto n = 1 + rng() % 40;
    auto g = testing::random_graph(n, 0.2, rng);
    auto text = write_dimacs(g);
    auto back = parse_dimacs(text);
    EXPECT_EQ(back, g);
    EXPECT_EQ(write_dimacs(back), text);
  }
  auto chordal = gen::random_chordal(300, 5);
  EXPECT_EQ(write_dimacs(parse_dimacs(write_dimacs(chordal))), write_dimacs(chordal));
}

TEST(InducedSubgraph, Examples) {
  auto c5 = gen::cycle(5);
  auto sub = induced_subgraph(c5, {0, 1, 2});
  EXPECT_EQ(sub.graph, testing::path_graph(3));
  EXPECT_EQ(sub.host, VertexSet({0, 1, 2}));

  auto k4 = gen::complete(4);
  auto edge = induced_subgraph(k4, {0, 1});
  EXPECT_EQ(edge.graph.n(), 2u);
  EXPECT_EQ(edge.graph.m(), 1u);

  EXPECT_EQ(kind_of([&] { induced_subgraph(c5, {1, 7}); }), ErrorKind::InvalidVertex);
}

TEST(InducedSubgraph, WholeVertexSetIsIdentity) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = testing::random_graph(1 + rng() % 25, 0.4, rng);
    auto sub = induced_subgraph(g, VertexSet::range(g.n()));
    EXPECT_EQ(sub.graph, g);
    for (Vertex v = 0; v < g.n(); ++v) EXPECT_EQ(sub.local(v), v);
  }
}

TEST(InducedSubgraph, EdgesMatchHost) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = testing::random_graph(20, 0.5, rng);
    std::vector<Vertex> members;
    for (Vertex v = 0; v < g.n(); ++v) {
      if (rng() % 2) members.push_back(v);
    }
    VertexSet s(members);
    auto sub = induced_subgraph(g, s);
    ASSERT_EQ(sub.graph.n(), s.size());
    for (Vertex a = 0; a < s.size(); ++a) {
      for (Vertex b = 0; b < s.size(); ++b) {
        if (a != b) {
          EXPECT_EQ(sub.graph.adjacent(a, b), g.adjacent(s[a], s[b]));
        }
      }
    }
  }
}

TEST(Components, Examples) {
  EXPECT_EQ(connected_components(gen::cycle(5)).count(), 1u);
  auto two_edges = Graph::from_edge_list(4, {{0, 1}, {2, 3}});
  auto parts = connected_components(two_edges);
  ASSERT_EQ(parts.count(), 2u);
  EXPECT_EQ(parts.components[0], VertexSet({0, 1}));
  EXPECT_EQ(parts.components[1], VertexSet({2, 3}));
  EXPECT_EQ(connected_components(testing::edgeless(3)).count(), 3u);
}

TEST(Components, PartitionProperty) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = testing::random_graph(1 + rng() % 30, 0.08, rng);
    auto parts = connected_components(g);
    std::size_t total = 0;
    for (std::size_t c = 0; c < parts.count(); ++c) {
      total += parts.components[c].size();
      for (Vertex v : parts.components[c]) EXPECT_EQ(parts.component_of[v], c);
      if (c > 0) {
        EXPECT_LT(parts.components[c - 1].front(), parts.components[c].front());
      }
      auto sub = induced_subgraph(g, parts.components[c]);
      EXPECT_EQ(connected_components(sub.graph).count(), 1u);
    }
    EXPECT_EQ(total, g.n());
    for (const auto& [u, v] : g.edges()) EXPECT_EQ(parts.component_of[u], parts.component_of[v]);
  }
}

TEST(CliqueSet, Examples) {
  EXPECT_TRUE(is_clique_set(gen::complete(4), {0, 1, 2, 3}));
  EXPECT_FALSE(is_clique_set(gen::cycle(5), {0, 1, 2}));
  EXPECT_TRUE(is_clique_set(gen::cycle(5), {}));
  EXPECT_TRUE(is_clique_set(gen::cycle(5), {3}));
}

}  // namespace
}  // namespace capcolor
