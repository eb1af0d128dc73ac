#pragma once

#include <string>
#include <vector>

#include "oddfactor/graph.hpp"

namespace oddfactor {

inline constexpr int kCanonicalMaxOrder = 10;

struct CanonicalLabeling {
  /// "<n>:<bits>", bits = adjacency of positions (1,0),(2,0),(2,1),(3,0),...
  std::string label;
  /// position_of[v] = canonical position of original vertex v.
  std::vector<int> position_of;
};

/// Lexicographically minimal lower-triangle adjacency string over all
/// labelings that list vertices by ascending degree. Isomorphic graphs get
/// identical labels. Throws OrderError above kCanonicalMaxOrder.
CanonicalLabeling canonical_labeling(const Graph& g);

std::string canonical_form(const Graph& g);

/// g relabeled so that vertex i is canonical position i.
Graph canonical_graph(const Graph& g);

}  // namespace oddfactor
