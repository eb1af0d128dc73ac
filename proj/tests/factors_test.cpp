#include <gtest/gtest.h>

#include <random>

#include "oddfactor/corpus.hpp"
#include "oddfactor/factors.hpp"
#include "oddfactor/generators.hpp"
#include "oddfactor/parameters.hpp"
#include "oddfactor/structure.hpp"
#include "oracle.hpp"

using namespace oddfactor;

TEST(CpCriterion, Examples) {
  const auto bt = cp_criterion(bowtie());
  EXPECT_FALSE(bt.exists);
  ASSERT_TRUE(bt.violation);
  EXPECT_EQ(bt.violation->set, VertexSet{});
  EXPECT_EQ(bt.violation->tc_count, 1);

  EXPECT_TRUE(cp_criterion(cycle_graph(5)).exists);
  EXPECT_FALSE(cp_criterion(cycle_graph(5)).violation);

  const auto gm = cp_criterion(gm_graph(3));
  EXPECT_FALSE(gm.exists);
  EXPECT_EQ(gm.violation->set, (VertexSet{0, 1}));
  EXPECT_EQ(gm.violation->tc_count, 3);

  const auto hm = cp_criterion(hm_graph(2));
  EXPECT_EQ(hm.violation->set, VertexSet{0});
  EXPECT_EQ(hm.violation->tc_count, 2);

  EXPECT_FALSE(cp_criterion(Graph(1)).exists);
  EXPECT_THROW(cp_criterion(Graph(0)), OrderError);
  EXPECT_THROW(cp_criterion(cycle_graph(27)), OrderError);
}

TEST(FractionalTutte, Examples) {
  EXPECT_TRUE(fractional_tutte(complete_graph(3)).exists);
  const std::vector<Edge> star = {{0, 1}, {0, 2}, {0, 3}};
  const auto s = fractional_tutte(Graph(4, star));
  EXPECT_FALSE(s.exists);
  EXPECT_EQ(s.violation->set, VertexSet{0});
  EXPECT_EQ(s.violation->isolated, 3);
  EXPECT_TRUE(fractional_tutte(bowtie()).exists);
}

TEST(FindFactor, Examples) {
  const auto c7 = find_factor(cycle_graph(7), 5);
  ASSERT_TRUE(c7);
  ASSERT_EQ(c7->components.size(), 1U);
  EXPECT_EQ(std::get<FactorCycle>(c7->components[0]).vertices, (std::vector<int>{0, 1, 2, 3, 4, 5, 6}));

  const auto p4 = find_factor(path_graph(4), 5);
  ASSERT_TRUE(p4);
  EXPECT_EQ(render(*p4), "edge 0 1\nedge 2 3\n");

  EXPECT_FALSE(find_factor(hm_graph(2), 5));
  const auto bt = find_factor(bowtie(), 3);
  ASSERT_TRUE(bt);
  EXPECT_TRUE(validate_factor(bowtie(), *bt, 3));
  EXPECT_FALSE(find_factor(bowtie(), 5));
}

TEST(FindFactor, DegenerateInputsAreAbsentNotErrors) {
  const std::vector<Edge> one = {{0, 1}};
  EXPECT_FALSE(find_factor(Graph(3, one), 5));
  EXPECT_FALSE(find_factor(Graph(1), 3));
  EXPECT_THROW(find_factor(cycle_graph(5), 4), std::invalid_argument);
  EXPECT_THROW(find_factor(cycle_graph(17), 5), OrderError);
  EXPECT_TRUE(find_factor(cycle_graph(17), 5, {20}));
}

TEST(ValidateFactor, Examples) {
  const Graph c5 = cycle_graph(5);
  EXPECT_TRUE(validate_factor(c5, {5, {FactorCycle{{0, 1, 2, 3, 4}}}}, 5));
  EXPECT_EQ(validate_factor(c5, {5, {FactorEdge{0, 1}, FactorEdge{2, 3}}}, 5).fault, FactorFault::kVertexUncovered);
  EXPECT_EQ(validate_factor(cycle_graph(6), {5, {FactorCycle{{0, 1, 2, 3, 4, 5}}}}, 5).fault, FactorFault::kEvenCycle);
  EXPECT_EQ(validate_factor(complete_graph(3), {3, {FactorCycle{{0, 1, 2}}}}, 5).fault, FactorFault::kCycleTooShort);
  EXPECT_EQ(validate_factor(c5, {5, {FactorCycle{{0, 2, 1, 3, 4}}}}, 5).fault, FactorFault::kMissingEdge);
  EXPECT_EQ(validate_factor(path_graph(2), {5, {FactorEdge{0, 1}, FactorEdge{1, 0}}}, 5).fault,
            FactorFault::kVertexRepeated);
  EXPECT_EQ(validate_factor(path_graph(2), {5, {FactorEdge{0, 2}}}, 5).fault, FactorFault::kVertexOutOfRange);
}

// Both deciders against backtracking and against edge-subset enumeration.
TEST(Factors, DecidersMatchConstructionOnSmallClasses) {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : all_graphs(n)) {
      const auto f5 = find_factor(g, 5);
      const auto f3 = find_factor(g, 3);
      EXPECT_EQ(cp_criterion(g).exists, f5.has_value());
      EXPECT_EQ(fractional_tutte(g).exists, f3.has_value());
      EXPECT_EQ(f5.has_value(), oracle::brute_factor_exists(g, 5));
      EXPECT_EQ(f3.has_value(), oracle::brute_factor_exists(g, 3));
      if (f5) EXPECT_TRUE(validate_factor(g, *f5, 5));
      if (f3) EXPECT_TRUE(validate_factor(g, *f3, 3));
      if (!f3) EXPECT_FALSE(f5.has_value());
    }
  }
}

TEST(Factors, ViolationsRecount) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 500; ++i) {
    const Graph g = random_graph(3 + i % 9, 0.25, rng);
    const auto d = cp_criterion(g);
    if (d.violation) {
      EXPECT_EQ(count_tc_blockwise(g, d.violation->set), d.violation->tc_count);
      EXPECT_GE(d.violation->tc_count, d.violation->set.size() + 1);
    }
    const auto t = fractional_tutte(g);
    if (t.violation) {
      EXPECT_EQ(count_c_iso(g, t.violation->set).isolated, t.violation->isolated);
      EXPECT_GT(t.violation->isolated, t.violation->set.size());
    }
  }
}

TEST(Factors, IndependentOfJobCount) {
  std::mt19937_64 rng(43);
  EnumerationOptions many;
  many.jobs = 4;
  for (int i = 0; i < 20; ++i) {
    const Graph g = random_graph(16 + i % 4, 0.12, rng);
    const auto a = cp_criterion(g);
    const auto b = cp_criterion(g, many);
    EXPECT_EQ(a.exists, b.exists);
    if (a.violation) EXPECT_EQ(a.violation->set, b.violation->set);
  }
}

// Adding an isolated vertex to a large clique keeps every factor away while
// isolated toughness and its variant grow with the clique.
TEST(Factors, IsolatedVertexPlusCliqueHasNoFactorAtAnyIsolatedToughness) {
  for (int k = 6; k <= 9; ++k) {
    std::vector<Edge> edges;
    for (int u = 1; u <= k; ++u)
      for (int v = u + 1; v <= k; ++v) edges.emplace_back(u, v);
    const Graph g(k + 1, edges);
    EXPECT_FALSE(cp_criterion(g).exists);
    EXPECT_EQ(isolated_toughness(g).value, Rational(k - 1, 2));
    EXPECT_EQ(isolated_toughness_variant(g).value, Rational(k - 1));
  }
}
