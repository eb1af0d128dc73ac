#include "oddfactor/graph.hpp"

#include <bit>
#include <string>

namespace oddfactor {

namespace {

void check_order(int order) {
  if (order < 0 || order > Graph::kMaxOrder) {
    throw OrderError("graph order " + std::to_string(order) + " outside 0.." +
                     std::to_string(Graph::kMaxOrder));
  }
}

}  // namespace

Graph::Graph(int order) : order_(order) {
  check_order(order);
  adjacency_.assign(static_cast<std::size_t>(order), 0);
}

Graph::Graph(int order, std::span<const Edge> edges) : Graph(order) {
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= order || v >= order) {
      throw std::invalid_argument("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                  ") out of range for order " + std::to_string(order));
    }
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (adjacent(u, v)) {
      throw std::invalid_argument("duplicate edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
    }
    adjacency_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    adjacency_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    ++edge_count_;
  }
}

Graph Graph::from_adjacency(std::vector<std::uint64_t> adjacency) {
  const int order = static_cast<int>(adjacency.size());
  check_order(order);
  Graph g;
  g.order_ = order;
  const std::uint64_t range = VertexSet::range(order).bits();
  int degree_sum = 0;
  for (int u = 0; u < order; ++u) {
    const std::uint64_t row = adjacency[static_cast<std::size_t>(u)];
    if ((row & ~range) != 0 || ((row >> u) & 1U)) {
      throw std::invalid_argument("adjacency row " + std::to_string(u) + " has a loop or out-of-range bit");
    }
    for (std::uint64_t r = row; r != 0; r &= r - 1) {
      if (((adjacency[static_cast<std::size_t>(std::countr_zero(r))] >> u) & 1U) == 0) {
        throw std::invalid_argument("adjacency is not symmetric at vertex " + std::to_string(u));
      }
    }
    degree_sum += std::popcount(row);
  }
  g.edge_count_ = degree_sum / 2;
  g.adjacency_ = std::move(adjacency);
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (int u = 0; u < order_; ++u) {
    const VertexSet later = neighbors(u) - VertexSet::range(u + 1);
    for (int v : later.members()) out.emplace_back(u, v);
  }
  return out;
}

Graph Graph::with_edge(int u, int v) const {
  auto list = edges();
  list.emplace_back(u, v);
  return Graph(order_, list);
}

InducedSubgraph induced_delete(const Graph& g, VertexSet removed) {
  const VertexSet kept = g.vertices() - removed;
  std::vector<int> original = kept.members();
  std::vector<int> relabel(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < original.size(); ++i) relabel[static_cast<std::size_t>(original[i])] = static_cast<int>(i);

  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) {
    if (kept.contains(u) && kept.contains(v)) {
      edges.emplace_back(relabel[static_cast<std::size_t>(u)], relabel[static_cast<std::size_t>(v)]);
    }
  }
  return {Graph(static_cast<int>(original.size()), edges), std::move(original)};
}

}  // namespace oddfactor
