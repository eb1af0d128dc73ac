#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oddfactor/graph.hpp"
#include "oddfactor/rational.hpp"

namespace oddfactor {

/// An isomorphism class of graphs without a {K2, C_{2i+1} : i >= 2}-factor
/// whose isolated toughness variant exceeds the scan threshold.
struct ExceptionClass {
  std::string label;
  /// Representative in canonical labeling.
  Graph graph;
  Rational iprime;
};

struct ExceptionScan {
  int order = 0;
  Rational threshold;
  std::uint64_t labeled_graphs = 0;
  std::uint64_t labeled_without_factor = 0;
  std::uint64_t labeled_exceptions = 0;
  /// Sorted by label.
  std::vector<ExceptionClass> classes;
};

/// Scans every labeled graph on `order` vertices (2^(order(order-1)/2) of
/// them) for factor-free graphs with I' > threshold, deduplicated by
/// canonical form. Only order 7 is supported. Results do not depend on jobs.
ExceptionScan enumerate_exceptions(int order = 7, int jobs = 1, Rational threshold = Rational(4));

/// Labeled graph number `code` on n vertices: bit i of code is the i-th pair
/// in the order (0,1),(0,2),...,(n-2,n-1).
Graph graph_from_code(int n, std::uint64_t code);

}  // namespace oddfactor
