#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "oddfactor/canonical.hpp"
#include "oddfactor/generators.hpp"
#include "oddfactor/io.hpp"
#include "oddfactor/structure.hpp"
#include "oracle.hpp"

using namespace oddfactor;

TEST(EdgeList, ParsesSmallestEdge) {
  const Graph g = parse_edge_list("n 2\n0 1");
  EXPECT_EQ(g.order(), 2);
  EXPECT_EQ(g.size(), 1);
  EXPECT_TRUE(g.adjacent(0, 1));
}

TEST(EdgeList, KeepsIsolatedVerticesFromHeader) {
  const Graph g = parse_edge_list("n 3\n");
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(g.size(), 0);
}

TEST(EdgeList, CommentsAndBlankLines) {
  const Graph g = parse_edge_list("# triangle\n\nn 3   # header\n0 1\n  1 2\n2 0 # closing\n");
  EXPECT_EQ(g, cycle_graph(3));
}

TEST(EdgeList, RejectsWithLineNumbers) {
  auto line_of = [](std::string_view text) {
    try {
      parse_edge_list(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  EXPECT_EQ(line_of("n 3\n0 0"), 2);          // self-loop
  EXPECT_EQ(line_of("n 3\n0 1\n1 0"), 3);     // duplicate, reversed
  EXPECT_EQ(line_of("n 3\n0 3"), 2);          // out of range
  EXPECT_EQ(line_of("# c\nm 3\n"), 2);        // bad header
  EXPECT_EQ(line_of("n 3\n0 1 2\n"), 2);      // extra field
  EXPECT_EQ(line_of("n -1\n"), 1);
  EXPECT_EQ(line_of("n 65\n"), 1);
  EXPECT_NE(line_of(""), -1);                 // missing header
}

TEST(EdgeList, SerializesCanonically) {
  EXPECT_EQ(serialize_edge_list(parse_edge_list("n 2\n1 0\n")), "n 2\n0 1\n");
  EXPECT_EQ(serialize_edge_list(Graph(3)), "n 3\n");
  EXPECT_EQ(serialize_edge_list(parse_edge_list("n 4\n3 1\n2 0\n0 1\n")), "n 4\n0 1\n0 2\n1 3\n");
}

TEST(EdgeList, RoundTripOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Graph g = random_graph(1 + static_cast<int>(seed % 20), 0.1 * static_cast<double>(seed % 11), seed);
    const std::string text = serialize_edge_list(g);
    EXPECT_EQ(parse_edge_list(text), g);
    EXPECT_EQ(serialize_edge_list(parse_edge_list(text)), text);
  }
}

TEST(Graph, RejectsNonSimpleInput) {
  const std::vector<Edge> loop = {{1, 1}};
  const std::vector<Edge> dup = {{0, 1}, {1, 0}};
  EXPECT_THROW(Graph(3, loop), std::invalid_argument);
  EXPECT_THROW(Graph(3, dup), std::invalid_argument);
  EXPECT_THROW(Graph(65), OrderError);
  EXPECT_THROW(Graph::from_adjacency({0b10, 0b00}), std::invalid_argument);
}

TEST(InducedDelete, CycleMinusVertexIsPath) {
  const auto sub = induced_delete(cycle_graph(5), VertexSet{0});
  EXPECT_EQ(sub.graph, path_graph(4));
  EXPECT_EQ(sub.original, (std::vector<int>{1, 2, 3, 4}));
}

TEST(InducedDelete, EmptyDeletionIsIdentity) {
  const Graph g = hm_graph(3);
  EXPECT_EQ(induced_delete(g, {}).graph, g);
}

TEST(InducedDelete, BowtieMinusCutVertexIsTwoEdges) {
  const auto sub = induced_delete(bowtie(), VertexSet{0});
  const std::vector<Edge> two_edges = {{0, 1}, {2, 3}};
  EXPECT_EQ(sub.graph, Graph(4, two_edges));
}

TEST(InducedDelete, DeletingEverythingGivesOrderZero) {
  const auto sub = induced_delete(cycle_graph(4), VertexSet::range(4));
  EXPECT_EQ(sub.graph.order(), 0);
  EXPECT_TRUE(sub.original.empty());
}

TEST(Generators, GmOrderAndSize) {
  const Graph g3 = gm_graph(3);
  EXPECT_EQ(g3.order(), 5);
  EXPECT_EQ(g3.size(), 7);
  EXPECT_TRUE(g3.adjacent(0, 1));  // K2 on {0, 1}
  for (int v = 2; v < 5; ++v) EXPECT_EQ(g3.neighbors(v), (VertexSet{0, 1}));
  for (int m = 2; m <= 12; ++m) {
    const Graph g = gm_graph(m);
    EXPECT_EQ(g.order(), 2 * m - 1);
    EXPECT_EQ(g.size(), (m - 1) * (m - 2) / 2 + m * (m - 1));
  }
}

TEST(Generators, HmOrderAndSize) {
  const Graph h2 = hm_graph(2);
  EXPECT_EQ(h2.order(), 7);
  EXPECT_EQ(h2.size(), 12);
  EXPECT_EQ(h2.degree(0), 6);
  for (int m = 2; m <= 12; ++m) {
    const Graph g = hm_graph(m);
    EXPECT_EQ(g.order(), 4 * m - 1);
    EXPECT_EQ(g.size(), (m - 1) * (m - 2) / 2 + 3 * m + 3 * m * (m - 1));
  }
}

TEST(Generators, StandardFamilies) {
  EXPECT_EQ(cycle_graph(5).size(), 5);
  for (int v = 0; v < 5; ++v) EXPECT_EQ(cycle_graph(5).degree(v), 2);
  EXPECT_EQ(path_graph(4).size(), 3);
  EXPECT_TRUE(complete_graph(6).is_complete());
  EXPECT_EQ(bowtie().size(), 6);
}

TEST(Generators, RejectsInvalidSpecs) {
  EXPECT_THROW(gm_graph(1), std::invalid_argument);
  EXPECT_THROW(hm_graph(17), std::invalid_argument);  // order 67
  EXPECT_THROW(cycle_graph(2), std::invalid_argument);
  EXPECT_THROW(random_graph(5, 1.5, 1), std::invalid_argument);
  EXPECT_THROW(generate({Family::kRandom, 5, 0, 0.5, 0, std::nullopt}), std::invalid_argument);
  EXPECT_THROW(generate({Family::kCactus, 0, 0, 0.0, 3, std::nullopt}), std::invalid_argument);
}

TEST(Generators, RandomIsReproducible) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    EXPECT_EQ(random_graph(12, 0.4, seed), random_graph(12, 0.4, seed));
  }
  EXPECT_NE(random_graph(12, 0.4, 1), random_graph(12, 0.4, 2));
  EXPECT_EQ(random_graph(9, 0.0, 3).size(), 0);
  EXPECT_TRUE(random_graph(9, 1.0, 3).is_complete());
}

// The edge rule is fixed: pair i takes the i-th draw of mt19937_64(seed).
TEST(Generators, RandomFollowsDocumentedDrawOrder) {
  std::mt19937_64 rng(99);
  std::vector<Edge> expected;
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v)
      if (static_cast<double>(rng() >> 11) / 9007199254740992.0 < 0.5) expected.emplace_back(u, v);
  EXPECT_EQ(random_graph(6, 0.5, 99), Graph(6, expected));
}

TEST(Generators, CactusIsTriangularCactus) {
  for (int blocks = 1; blocks <= 12; ++blocks) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const Graph g = cactus_graph(blocks, seed);
      ASSERT_EQ(g.order(), 2 * blocks + 1);
      EXPECT_EQ(components(g).size(), 1U);
      EXPECT_TRUE(is_triangular_cactus(g, g.vertices()));
    }
  }
  EXPECT_EQ(cactus_graph(3, 5), cactus_graph(3, 5));
}

TEST(Canonical, InvariantUnderRelabeling) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 9;
    const Graph g = random_graph(n, 0.45, rng);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(canonical_form(g), canonical_form(oracle::permuted(g, perm)));
    EXPECT_EQ(canonical_form(canonical_graph(g)), canonical_form(g));
  }
}

TEST(Canonical, SeparatesNonIsomorphicGraphs) {
  EXPECT_NE(canonical_form(cycle_graph(5)), canonical_form(path_graph(5)));
  const std::vector<Edge> k4_pendant = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}};
  EXPECT_NE(canonical_form(bowtie()), canonical_form(Graph(5, k4_pendant)));
}

// Equal labels iff isomorphic, checked against permutation search.
TEST(Canonical, AgreesWithBruteForceIsomorphism) {
  std::mt19937_64 rng(11);
  std::vector<Graph> sample;
  for (int i = 0; i < 60; ++i) sample.push_back(random_graph(6, 0.5, rng));
  for (std::size_t a = 0; a < sample.size(); ++a) {
    for (std::size_t b = a + 1; b < sample.size(); ++b) {
      EXPECT_EQ(canonical_form(sample[a]) == canonical_form(sample[b]),
                oracle::brute_isomorphic(sample[a], sample[b]));
    }
  }
}

TEST(Canonical, RejectsLargeOrder) { EXPECT_THROW(canonical_form(cycle_graph(11)), OrderError); }
