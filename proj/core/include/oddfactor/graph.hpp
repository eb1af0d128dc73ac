#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "oddfactor/vertex_set.hpp"

namespace oddfactor {

using Edge = std::pair<int, int>;

/// Thrown when a graph or parameter request falls outside supported bounds.
class OrderError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Simple undirected graph on vertices 0..n-1, immutable once built.
/// Neighborhoods are bitmasks, which limits the order to 64.
class Graph {
 public:
  static constexpr int kMaxOrder = 64;

  Graph() = default;
  /// Edgeless graph of the given order.
  explicit Graph(int order);
  /// Throws std::invalid_argument on self-loops, duplicates or out-of-range ends.
  Graph(int order, std::span<const Edge> edges);
  /// From neighbor bitmasks; throws std::invalid_argument unless simple and symmetric.
  static Graph from_adjacency(std::vector<std::uint64_t> adjacency);

  int order() const { return order_; }
  int size() const { return edge_count_; }
  VertexSet vertices() const { return VertexSet::range(order_); }
  VertexSet neighbors(int v) const { return VertexSet(adjacency_[static_cast<std::size_t>(v)]); }
  std::uint64_t adjacency_bits(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  const std::vector<std::uint64_t>& adjacency() const { return adjacency_; }
  bool adjacent(int u, int v) const { return (adjacency_[static_cast<std::size_t>(u)] >> v) & 1U; }
  int degree(int v) const { return neighbors(v).size(); }
  bool is_complete() const { return edge_count_ == order_ * (order_ - 1) / 2; }

  /// Edges as (min, max) pairs in ascending order.
  std::vector<Edge> edges() const;

  /// Same graph with edge {u, v} added; throws if present or a loop.
  Graph with_edge(int u, int v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int order_ = 0;
  int edge_count_ = 0;
  std::vector<std::uint64_t> adjacency_;
};

/// G - S together with the map from new labels back to original labels.
struct InducedSubgraph {
  Graph graph;
  std::vector<int> original;
};

InducedSubgraph induced_delete(const Graph& g, VertexSet removed);

}  // namespace oddfactor
