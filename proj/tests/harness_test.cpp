#include <gtest/gtest.h>

#include <algorithm>

#include "oddfactor/canonical.hpp"
#include "oddfactor/corpus.hpp"
#include "oddfactor/exceptions.hpp"
#include "oddfactor/generators.hpp"
#include "oddfactor/report.hpp"
#include "oddfactor/structure.hpp"
#include "oddfactor/sweep.hpp"
#include "oracle.hpp"

using namespace oddfactor;

TEST(Corpus, ClassCounts) {
  const std::vector<std::size_t> all = {1, 2, 4, 11, 34, 156, 1044};
  const std::vector<std::size_t> connected = {1, 1, 2, 6, 21, 112, 853};
  const auto conn = connected_graphs_up_to(7);
  for (int n = 1; n <= 7; ++n) {
    EXPECT_EQ(all_graphs(n).size(), all[n - 1]) << n;
    const auto c = std::count_if(conn.begin(), conn.end(), [&](const CorpusGraph& g) { return g.graph.order() == n; });
    EXPECT_EQ(static_cast<std::size_t>(c), connected[n - 1]) << n;
  }
  for (const auto& g : conn) EXPECT_EQ(components(g.graph).size(), 1U);
}

TEST(Corpus, ClassesArePairwiseNonIsomorphic) {
  const auto five = all_graphs(5);
  for (std::size_t i = 0; i < five.size(); ++i)
    for (std::size_t j = i + 1; j < five.size(); ++j) EXPECT_FALSE(oracle::brute_isomorphic(five[i], five[j]));
}

TEST(Corpus, RandomCorpusIsSeedDeterministic) {
  CorpusSpec spec;
  spec.count_per_order = 30;
  const auto a = random_corpus(spec);
  const auto b = random_corpus(spec);
  ASSERT_EQ(a.size(), 150U);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].name, b[i].name);
    EXPECT_EQ(a[i].graph.edges(), b[i].graph.edges());
  }
  spec.seed += 1;
  const auto c = random_corpus(spec);
  bool differs = false;
  for (std::size_t i = 0; i < a.size(); ++i) differs |= a[i].graph.edges() != c[i].graph.edges();
  EXPECT_TRUE(differs);
  EXPECT_EQ(format_probability(0.25), "0.25");
}

TEST(Report, MachineOutputCarriesNoTimings) {
  CheckReport a, b;
  a.add_exact(1, "x", "t = 1", Rational(1), Rational(1), "{}", 0.5);
  a.add_count(2, "y", "none", 3, "{0}", 0.1, "graphs");
  b.add_count(2, "y", "none", 3, "{0}", 9.0, "graphs");
  b.add_exact(1, "x", "t = 1", Rational(1), Rational(1), "{}", 7.0);
  EXPECT_EQ(a.machine(), b.machine());
  EXPECT_EQ(a.criterion_status(1), CheckStatus::kPass);
  EXPECT_EQ(a.criterion_status(2), CheckStatus::kFail);
  EXPECT_EQ(a.criterion_status(3), CheckStatus::kSkipped);
  EXPECT_FALSE(a.all_passed());
  EXPECT_NE(a.human().find("NOT ALL PASS"), std::string::npos);
}

TEST(Sweep, CsvShape) {
  SweepSpec spec;
  spec.corpus = {5, 6, 3, {0.5}, 11};
  const auto csv = sweep_csv(run_sweep(spec));
  EXPECT_EQ(csv.rfind("name,n,p,t,I,Iprime,bind,factor,note\n", 0), 0U);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 7);
  EXPECT_EQ(csv, sweep_csv(run_sweep(spec)));

  spec.complete_graphs = true;
  spec.enumeration.cap = 5;
  const auto rows = run_sweep(spec);
  ASSERT_EQ(rows.size(), 2U);
  EXPECT_FALSE(rows[0].skipped);
  EXPECT_EQ(rows[0].t, Rational::infinity());
  EXPECT_EQ(rows[0].binding, Rational(4));
  EXPECT_TRUE(rows[1].skipped);
}

TEST(Exceptions, GraphFromCode) {
  EXPECT_EQ(graph_from_code(4, 0b000001).edges(), (std::vector<Edge>{{0, 1}}));
  EXPECT_EQ(graph_from_code(4, 0b100000).edges(), (std::vector<Edge>{{2, 3}}));
  EXPECT_EQ(graph_from_code(3, 0b111).size(), 3);
}

TEST(Exceptions, OrderSevenScan) {
  const auto scan = enumerate_exceptions(7, 2);
  EXPECT_EQ(scan.labeled_graphs, 2097152U);
  EXPECT_THROW(enumerate_exceptions(6), OrderError);
  const auto hm2 = canonical_form(hm_graph(2));
  int connected = 0;
  bool has_hm2 = false;
  for (const auto& c : scan.classes) {
    EXPECT_GT(c.iprime, Rational(4));
    EXPECT_FALSE(oracle::brute_factor_exists(c.graph, 5));
    if (components(c.graph).size() == 1) ++connected;
    has_hm2 |= c.label == hm2;
  }
  EXPECT_TRUE(has_hm2);
  // Three connected classes, plus K1+K6 and K3+K4 once disconnected graphs count.
  EXPECT_EQ(connected, 3);
  EXPECT_EQ(scan.classes.size(), 5U);
}
