#include <gtest/gtest.h>

#include <random>
#include <set>

#include "capcolor/decomposition.hpp"
#include "capcolor/generators.hpp"
#include "capcolor/oracles.hpp"
#include "test_support.hpp"

namespace capcolor {
namespace {

Graph with_edges(const Graph& g, const std::vector<Edge>& extra) {
  auto edges = g.edges();
  edges.insert(edges.end(), extra.begin(), extra.end());
  return Graph::from_edge_list(g.n(), edges);
}

Graph bowtie() { return Graph::from_edge_list(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}}); }

// order is a perfect elimination ordering of g + fill.
void expect_perfect(const Graph& g, const EliminationOrdering& o) {
  auto filled = with_edges(g, o.fill);
  std::vector<std::size_t> pos(g.n());
  for (std::size_t i = 0; i < o.order.size(); ++i) pos[o.order[i]] = i;
  for (Vertex v = 0; v < g.n(); ++v) {
    std::vector<Vertex> later;
    for (Vertex w : filled.neighbors(v)) {
      if (pos[w] > pos[v]) later.push_back(w);
    }
    EXPECT_EQ(later, o.later_neighbors[v]);
    EXPECT_TRUE(is_clique_set(filled, VertexSet(later)));
  }
}

void expect_fill_minimal(const Graph& g, const EliminationOrdering& o) {
  for (std::size_t drop = 0; drop < o.fill.size(); ++drop) {
    auto rest = o.fill;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(drop));
    EXPECT_FALSE(is_chordal(with_edges(g, rest))) << "fill edge " << drop << " is redundant";
  }
}

TEST(LexM, ChordalInputHasNoFill) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto g = gen::random_chordal(30, seed);
    auto o = lexm_minimal_ordering(g);
    EXPECT_TRUE(o.fill.empty());
    expect_perfect(g, o);
  }
  EXPECT_TRUE(lexm_minimal_ordering(gen::complete(5)).fill.empty());
}

TEST(LexM, C4NeedsOneChord) {
  auto g = gen::cycle(4);
  auto o = lexm_minimal_ordering(g);
  EXPECT_EQ(o.fill.size(), 1u);
  expect_perfect(g, o);
}

TEST(LexM, C6FillIsThreeEdgesAndMinimal) {
  auto g = gen::cycle(6);
  auto o = lexm_minimal_ordering(g);
  EXPECT_EQ(o.fill.size(), 3u);
  expect_perfect(g, o);
  expect_fill_minimal(g, o);
}

TEST(LexM, RandomGraphsGetMinimalFill) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = testing::random_graph(2 + rng() % 12, 0.3, rng);
    auto o = lexm_minimal_ordering(g);
    std::vector<Vertex> sorted = o.order;
    std::sort(sorted.begin(), sorted.end());
    for (Vertex v = 0; v < g.n(); ++v) ASSERT_EQ(sorted[v], v);
    expect_perfect(g, o);
    expect_fill_minimal(g, o);
  }
}

TEST(LexM, EmptyGraph) {
  auto o = lexm_minimal_ordering(Graph{});
  EXPECT_TRUE(o.order.empty());
  EXPECT_TRUE(o.fill.empty());
}

// Checks every structural promise of a decomposition tree of g.
void expect_valid_tree(const Graph& g, const DecompositionTree& tree) {
  if (g.n() == 0) {
    EXPECT_TRUE(tree.leaves().empty());
    return;
  }
  EXPECT_EQ(tree.vertices_under(tree.root), VertexSet::range(g.n()));
  auto leaves = tree.leaves();
  EXPECT_LE(leaves.size(), g.n());
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const auto& node = tree.nodes[i];
    if (node.is_leaf()) continue;
    auto left = tree.vertices_under(static_cast<std::size_t>(node.left));
    auto right = tree.vertices_under(static_cast<std::size_t>(node.right));
    EXPECT_TRUE(is_clique_set(g, node.separator));
    EXPECT_EQ(left.intersect(right), node.separator);
    // No edge between the two sides outside the separator.
    auto only_left = left.minus(node.separator);
    auto only_right = right.minus(node.separator);
    EXPECT_FALSE(only_left.empty());
    EXPECT_FALSE(only_right.empty());
    for (Vertex u : only_left) {
      for (Vertex w : g.neighbors(u)) EXPECT_FALSE(only_right.contains(w));
    }
  }
  for (const auto& [u, v] : g.edges()) {
    bool covered = false;
    for (std::size_t leaf : leaves) {
      const auto& atom = tree.nodes[leaf].atom;
      covered = covered || (atom.contains(u) && atom.contains(v));
    }
    EXPECT_TRUE(covered) << "edge " << u << "-" << v;
  }
  for (std::size_t leaf : leaves) {
    const auto& atom = tree.nodes[leaf].atom;
    if (atom.size() <= kMaxCutsetOracleVertices) {
      EXPECT_FALSE(find_clique_cutset_bruteforce(induced_subgraph(g, atom).graph));
    }
  }
}

TEST(CliqueCutset, PathSplitsIntoEdges) {
  auto g = testing::path_graph(4);
  auto tree = clique_cutset_decompose(g);
  expect_valid_tree(g, tree);
  auto atoms = tree.atoms();
  std::set<std::vector<Vertex>> got;
  for (const auto& a : atoms) got.insert(a.members());
  EXPECT_EQ(got, (std::set<std::vector<Vertex>>{{0, 1}, {1, 2}, {2, 3}}));
  std::set<std::vector<Vertex>> separators;
  for (const auto& node : tree.nodes) {
    if (!node.is_leaf()) separators.insert(node.separator.members());
  }
  EXPECT_EQ(separators, (std::set<std::vector<Vertex>>{{1}, {2}}));
}

TEST(CliqueCutset, HoleIsOneAtom) {
  auto g = gen::cycle(5);
  auto tree = clique_cutset_decompose(g);
  ASSERT_EQ(tree.nodes.size(), 1u);
  EXPECT_EQ(tree.nodes[0].atom, VertexSet::range(5));
}

TEST(CliqueCutset, BowtieSplitsAtCenter) {
  auto g = bowtie();
  auto tree = clique_cutset_decompose(g);
  expect_valid_tree(g, tree);
  ASSERT_EQ(tree.nodes.size(), 3u);
  EXPECT_EQ(tree.nodes[tree.root].separator, VertexSet({2}));
  std::set<std::vector<Vertex>> atoms;
  for (const auto& a : tree.atoms()) atoms.insert(a.members());
  EXPECT_EQ(atoms, (std::set<std::vector<Vertex>>{{0, 1, 2}, {2, 3, 4}}));
}

TEST(CliqueCutset, DisconnectedJoinsOnEmptySeparators) {
  auto g = Graph::from_edge_list(5, {{0, 1}, {2, 3}});
  auto tree = clique_cutset_decompose(g);
  expect_valid_tree(g, tree);
  EXPECT_EQ(tree.leaves().size(), 3u);
  EXPECT_TRUE(tree.nodes[tree.root].separator.empty());
}

TEST(CliqueCutset, EmptyAndSingleVertex) {
  auto empty = clique_cutset_decompose(Graph{});
  EXPECT_TRUE(empty.nodes.empty());
  EXPECT_TRUE(empty.leaves().empty());
  auto single = clique_cutset_decompose(testing::edgeless(1));
  ASSERT_EQ(single.nodes.size(), 1u);
  EXPECT_EQ(single.nodes[0].atom, VertexSet({0}));
}

TEST(CliqueCutset, RandomGraphsSatisfyTreeInvariants) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = testing::random_graph(1 + rng() % 12, 0.15 + 0.5 * (rng() % 100) / 100.0, rng);
    expect_valid_tree(g, clique_cutset_decompose(g));
  }
}

TEST(CliqueCutset, ChordalAtomsAreCliques) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto g = gen::random_chordal(40, seed);
    auto tree = clique_cutset_decompose(g);
    for (const auto& atom : tree.atoms()) EXPECT_TRUE(is_clique_set(g, atom));
  }
}

// N[u] == N[v] checked directly on every pair.
void expect_twin_partition(const Graph& g, const TwinPartition& tp) {
  auto closed = [&](Vertex v) {
    std::vector<Vertex> nb(g.neighbors(v).begin(), g.neighbors(v).end());
    nb.push_back(v);
    std::sort(nb.begin(), nb.end());
    return nb;
  };
  for (Vertex u = 0; u < g.n(); ++u) {
    for (Vertex v = 0; v < g.n(); ++v) {
      EXPECT_EQ(tp.class_of[u] == tp.class_of[v], closed(u) == closed(v));
    }
  }
  for (std::size_t i = 0; i < tp.classes.size(); ++i) {
    EXPECT_TRUE(is_clique_set(g, tp.classes[i]));
    if (i > 0) {
      EXPECT_LT(tp.classes[i - 1].front(), tp.classes[i].front());
    }
    for (std::size_t j = i + 1; j < tp.classes.size(); ++j) {
      bool q = tp.quotient.adjacent(i, j);
      for (Vertex a : tp.classes[i]) {
        for (Vertex b : tp.classes[j]) EXPECT_EQ(g.adjacent(a, b), q);
      }
    }
  }
}

TEST(TwinPartition, CompleteGraphIsOneClass) {
  auto tp = twin_partition(gen::complete(6));
  ASSERT_EQ(tp.classes.size(), 1u);
  EXPECT_EQ(tp.classes[0].size(), 6u);
  EXPECT_EQ(tp.quotient.n(), 1u);
}

TEST(TwinPartition, HoleHasSingletons) {
  auto tp = twin_partition(gen::cycle(5));
  EXPECT_EQ(tp.classes.size(), 5u);
  EXPECT_EQ(tp.quotient, gen::cycle(5));
}

TEST(TwinPartition, G1HasFivePairs) {
  auto g = gen::c5_clique_blowup(1);
  auto tp = twin_partition(g);
  ASSERT_EQ(tp.classes.size(), 5u);
  for (const auto& c : tp.classes) EXPECT_EQ(c.size(), 2u);
  EXPECT_EQ(tp.quotient, gen::cycle(5));
  expect_twin_partition(g, tp);
}

TEST(TwinPartition, MatchesDefinitionOnRandomGraphs) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    auto base = testing::random_graph(1 + rng() % 8, 0.5, rng);
    std::vector<std::size_t> sizes(base.n());
    for (auto& s : sizes) s = 1 + rng() % 3;
    auto g = gen::blowup(base, sizes);
    expect_twin_partition(g, twin_partition(g));
  }
}

TEST(UniversalStrip, Examples) {
  auto k4 = strip_universal_vertices(gen::complete(4));
  EXPECT_EQ(k4.removed, (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_TRUE(k4.remaining.empty());

  auto star = strip_universal_vertices(Graph::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}}));
  EXPECT_EQ(star.removed, (std::vector<Vertex>{0}));
  EXPECT_EQ(star.remaining, VertexSet({1, 2, 3}));

  auto c5 = strip_universal_vertices(gen::cycle(5));
  EXPECT_TRUE(c5.removed.empty());
  EXPECT_EQ(c5.remaining, VertexSet::range(5));
}

TEST(UniversalStrip, RemainderHasNoUniversalVertex) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = testing::random_graph(1 + rng() % 10, 0.7, rng);
    auto strip = strip_universal_vertices(g);
    auto rest = induced_subgraph(g, strip.remaining);
    for (Vertex v = 0; v < rest.graph.n(); ++v) {
      EXPECT_NE(rest.graph.degree(v) + 1, rest.graph.n()) << "trial " << trial;
    }
  }
}

bool has_universal(const Graph& g) {
  for (Vertex v = 0; v < g.n(); ++v) {
    if (g.degree(v) + 1 == g.n()) return true;
  }
  return false;
}

Graph without(const Graph& g, Vertex u) { return induced_subgraph(g, VertexSet::range(g.n()).minus({u})).graph; }

// No clique cutset in g and u universal => none in g - u.
TEST(Atoms, RemovingUniversalKeepsAtom) {
  std::mt19937_64 rng(29);
  int checked = 0;
  for (int trial = 0; trial < 3000 && checked < 100; ++trial) {
    auto g = testing::random_graph(3 + rng() % 8, 0.75, rng);
    if (testing::brute_has_clique_cutset(g)) continue;
    for (Vertex u = 0; u < g.n(); ++u) {
      if (g.degree(u) + 1 != g.n()) continue;
      ++checked;
      EXPECT_FALSE(testing::brute_has_clique_cutset(without(g, u)));
    }
  }
  EXPECT_GT(checked, 20);
}

// In an in-class graph with neither a universal vertex nor a clique
// cutset, deleting one of two twins keeps both properties.
TEST(Atoms, RemovingTwinKeepsAtom) {
  std::mt19937_64 rng(31);
  int checked = 0;
  for (int trial = 0; trial < 4000 && checked < 60; ++trial) {
    auto base = testing::random_graph(5 + rng() % 4, 0.5, rng);
    std::vector<std::size_t> sizes(base.n());
    for (auto& s : sizes) s = 1 + rng() % 2;
    auto g = gen::blowup(base, sizes);
    if (g.n() > 14 || has_universal(g) || testing::brute_has_clique_cutset(g)) continue;
    if (!classify_membership(g).in_class) continue;
    auto tp = twin_partition(g);
    for (const auto& cls : tp.classes) {
      if (cls.size() < 2) continue;
      ++checked;
      auto h = without(g, cls.front());
      EXPECT_FALSE(has_universal(h));
      EXPECT_FALSE(testing::brute_has_clique_cutset(h));
    }
  }
  EXPECT_GT(checked, 10);
}

TEST(Atoms, StrippedQuotientIsTriangleFreeInClass) {
  std::mt19937_64 rng(37);
  int atoms = 0;
  for (int trial = 0; trial < 400; ++trial) {
    auto base = testing::random_graph(4 + rng() % 6, 0.55, rng);
    std::vector<std::size_t> sizes(base.n());
    for (auto& s : sizes) s = 1 + rng() % 2;
    auto g = gen::blowup(base, sizes);
    if (g.n() > 14 || !classify_membership(g).in_class) continue;
    for (const auto& atom : clique_cutset_decompose(g).atoms()) {
      auto a = induced_subgraph(g, atom).graph;
      auto core = induced_subgraph(a, strip_universal_vertices(a).remaining).graph;
      auto q = twin_partition(core).quotient;
      ++atoms;
      EXPECT_EQ(testing::brute_clique_number(q) <= 2, true);
    }
  }
  EXPECT_GT(atoms, 50);
}

}  // namespace
}  // namespace capcolor
