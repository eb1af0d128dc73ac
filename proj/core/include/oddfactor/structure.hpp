#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "oddfactor/graph.hpp"

namespace oddfactor {

/// Connected components, ordered by their smallest vertex.
using ComponentPartition = std::vector<VertexSet>;

struct Block {
  VertexSet vertices;
  std::vector<Edge> edges;
};

/// Biconnected components. Bridges appear as 2-vertex blocks and isolated
/// vertices as 1-vertex blocks with no edges.
struct BlockDecomposition {
  std::vector<Block> blocks;
  VertexSet cut_vertices;
};

struct ComponentCounts {
  int components = 0;
  int isolated = 0;
  friend bool operator==(const ComponentCounts&, const ComponentCounts&) = default;
};

ComponentPartition components(const Graph& g);
/// Components of the subgraph induced by `alive`, ordered by smallest vertex.
ComponentPartition components_within(const Graph& g, VertexSet alive);

BlockDecomposition blocks(const Graph& g);

/// c(G - S) and iso(G - S).
ComponentCounts count_c_iso(const Graph& g, VertexSet removed);

/// True iff `component` induces K1 or a connected graph whose blocks are all
/// triangles. Throws std::invalid_argument if `component` is not a connected
/// component of g.
bool is_triangular_cactus(const Graph& g, VertexSet component);

/// Number of triangular-cactus components of G - S (isolated vertices count).
int count_tc(const Graph& g, VertexSet removed);

/// count_tc evaluated through blocks() on each component of G - S.
int count_tc_blockwise(const Graph& g, VertexSet removed);

/// Union of the neighborhoods of the members of s.
VertexSet neighborhood(const Graph& g, VertexSet s);

// Allocation-free kernels over adjacency bitmasks. `alive` is the vertex set
// of the current induced subgraph; all results refer to G[alive].
namespace kernel {

inline std::uint64_t flood(std::span<const std::uint64_t> adj, std::uint64_t alive, int start) {
  std::uint64_t reached = std::uint64_t{1} << start;
  std::uint64_t frontier = reached;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f != 0; f &= f - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
    next &= alive & ~reached;
    reached |= next;
    frontier = next;
  }
  return reached;
}

inline int isolated(std::span<const std::uint64_t> adj, std::uint64_t alive) {
  int count = 0;
  for (std::uint64_t a = alive; a != 0; a &= a - 1) {
    if ((adj[static_cast<std::size_t>(std::countr_zero(a))] & alive) == 0) ++count;
  }
  return count;
}

inline ComponentCounts component_counts(std::span<const std::uint64_t> adj, std::uint64_t alive) {
  ComponentCounts out;
  std::uint64_t rest = alive;
  while (rest != 0) {
    const int v = std::countr_zero(rest);
    if ((adj[static_cast<std::size_t>(v)] & alive) == 0) {
      ++out.isolated;
      rest &= rest - 1;
    } else {
      rest &= ~flood(adj, alive, v);
    }
    ++out.components;
  }
  return out;
}

/// Connected `comp` is a triangular cactus iff it is K1, or it has odd order
/// k, exactly 3(k-1)/2 edges, and every edge lies in exactly one triangle.
inline bool is_triangular_cactus(std::span<const std::uint64_t> adj, std::uint64_t comp) {
  const int k = std::popcount(comp);
  if (k == 1) return true;
  if (k % 2 == 0) return false;
  int degree_sum = 0;
  for (std::uint64_t c = comp; c != 0; c &= c - 1) {
    const int u = std::countr_zero(c);
    const std::uint64_t nu = adj[static_cast<std::size_t>(u)] & comp;
    degree_sum += std::popcount(nu);
    // Each neighbor of u shares exactly one common neighbor with u.
    for (std::uint64_t w = nu; w != 0; w &= w - 1) {
      const int v = std::countr_zero(w);
      if (std::popcount(nu & adj[static_cast<std::size_t>(v)]) != 1) return false;
    }
  }
  return degree_sum == 3 * (k - 1);
}

inline int triangular_cacti(std::span<const std::uint64_t> adj, std::uint64_t alive) {
  int count = 0;
  std::uint64_t rest = alive;
  while (rest != 0) {
    const int v = std::countr_zero(rest);
    const std::uint64_t comp = flood(adj, alive, v);
    rest &= ~comp;
    if (is_triangular_cactus(adj, comp)) ++count;
  }
  return count;
}

inline std::uint64_t neighborhood(std::span<const std::uint64_t> adj, std::uint64_t s) {
  std::uint64_t out = 0;
  for (; s != 0; s &= s - 1) out |= adj[static_cast<std::size_t>(std::countr_zero(s))];
  return out;
}

}  // namespace kernel

}  // namespace oddfactor
