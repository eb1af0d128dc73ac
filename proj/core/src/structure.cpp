#include "oddfactor/structure.hpp"

#include <algorithm>
#include <stdexcept>

namespace oddfactor {

namespace {

class BlockFinder {
 public:
  explicit BlockFinder(const Graph& g)
      : g_(g), disc_(static_cast<std::size_t>(g.order()), -1), low_(static_cast<std::size_t>(g.order()), 0) {}

  BlockDecomposition run() {
    for (int v = 0; v < g_.order(); ++v) {
      if (disc_[static_cast<std::size_t>(v)] >= 0) continue;
      if (g_.degree(v) == 0) {
        disc_[static_cast<std::size_t>(v)] = timer_++;
        out_.blocks.push_back({VertexSet{v}, {}});
        continue;
      }
      int children = 0;
      visit(v, -1, children);
      if (children > 1) out_.cut_vertices.insert(v);
    }
    return std::move(out_);
  }

 private:
  void visit(int u, int parent, int& root_children) {
    disc_[static_cast<std::size_t>(u)] = low_[static_cast<std::size_t>(u)] = timer_++;
    for (int w : g_.neighbors(u).members()) {
      if (w == parent) continue;
      auto& du = disc_[static_cast<std::size_t>(u)];
      auto& lu = low_[static_cast<std::size_t>(u)];
      if (disc_[static_cast<std::size_t>(w)] < 0) {
        stack_.emplace_back(u, w);
        if (parent < 0) ++root_children;
        int unused = 0;
        visit(w, u, unused);
        lu = std::min(lu, low_[static_cast<std::size_t>(w)]);
        if (low_[static_cast<std::size_t>(w)] >= du) {
          if (parent >= 0) out_.cut_vertices.insert(u);
          pop_block(u, w);
        }
      } else if (disc_[static_cast<std::size_t>(w)] < du) {
        stack_.emplace_back(u, w);
        lu = std::min(lu, disc_[static_cast<std::size_t>(w)]);
      }
    }
  }

  void pop_block(int u, int w) {
    Block block;
    while (true) {
      const Edge e = stack_.back();
      stack_.pop_back();
      block.vertices.insert(e.first);
      block.vertices.insert(e.second);
      block.edges.emplace_back(std::min(e.first, e.second), std::max(e.first, e.second));
      if (e.first == u && e.second == w) break;
    }
    std::sort(block.edges.begin(), block.edges.end());
    out_.blocks.push_back(std::move(block));
  }

  const Graph& g_;
  std::vector<int> disc_;
  std::vector<int> low_;
  std::vector<Edge> stack_;
  int timer_ = 0;
  BlockDecomposition out_;
};

}  // namespace

ComponentPartition components_within(const Graph& g, VertexSet alive) {
  ComponentPartition out;
  std::uint64_t rest = alive.bits();
  while (rest != 0) {
    const std::uint64_t comp = kernel::flood(g.adjacency(), alive.bits(), std::countr_zero(rest));
    out.emplace_back(comp);
    rest &= ~comp;
  }
  return out;
}

ComponentPartition components(const Graph& g) { return components_within(g, g.vertices()); }

BlockDecomposition blocks(const Graph& g) { return BlockFinder(g).run(); }

ComponentCounts count_c_iso(const Graph& g, VertexSet removed) {
  return kernel::component_counts(g.adjacency(), (g.vertices() - removed).bits());
}

bool is_triangular_cactus(const Graph& g, VertexSet component) {
  if (component.empty() || !component.is_subset_of(g.vertices()) ||
      kernel::flood(g.adjacency(), g.vertices().bits(), component.front()) != component.bits()) {
    throw std::invalid_argument("vertex set " + component.str() + " is not a connected component");
  }
  if (component.size() == 1) return true;
  const auto sub = induced_delete(g, g.vertices() - component);
  const auto decomposition = blocks(sub.graph);
  return std::all_of(decomposition.blocks.begin(), decomposition.blocks.end(),
                     [](const Block& b) { return b.vertices.size() == 3 && b.edges.size() == 3; });
}

int count_tc(const Graph& g, VertexSet removed) {
  return kernel::triangular_cacti(g.adjacency(), (g.vertices() - removed).bits());
}

int count_tc_blockwise(const Graph& g, VertexSet removed) {
  const auto sub = induced_delete(g, removed);
  int count = 0;
  for (VertexSet comp : components(sub.graph)) {
    if (is_triangular_cactus(sub.graph, comp)) ++count;
  }
  return count;
}

VertexSet neighborhood(const Graph& g, VertexSet s) {
  return VertexSet(kernel::neighborhood(g.adjacency(), s.bits()));
}

}  // namespace oddfactor
