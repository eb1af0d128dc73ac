#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oddfactor/graph.hpp"

namespace oddfactor {

struct CorpusGraph {
  std::string name;
  Graph graph;
  /// Edge probability for random members; negative for structured ones.
  double p = -1.0;
};

/// Seeded random corpus: for each order in [n_min, n_max], count_per_order
/// graphs whose edge probabilities cycle through p_schedule. One
/// std::mt19937_64 seeded with `seed` feeds every graph in that order.
struct CorpusSpec {
  int n_min = 5;
  int n_max = 9;
  int count_per_order = 2000;
  std::vector<double> p_schedule = {0.2, 0.3, 0.4, 0.5, 0.6, 0.75};
  std::uint64_t seed = 20220101;
};

std::vector<CorpusGraph> random_corpus(const CorpusSpec& spec);

/// One representative per isomorphism class of graphs of the given order,
/// built by vertex augmentation and deduplicated by canonical form. Members
/// are in canonical labeling, sorted by canonical label. order <= 9.
std::vector<Graph> all_graphs(int order);

/// Connected isomorphism classes for every order in 1..max_order.
std::vector<CorpusGraph> connected_graphs_up_to(int max_order);

/// Formats a probability with up to six significant digits ("0.25").
std::string format_probability(double p);

}  // namespace oddfactor
