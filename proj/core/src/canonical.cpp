#include "oddfactor/canonical.hpp"

#include <algorithm>
#include <numeric>

namespace oddfactor {

namespace {

class MinimalLabelSearch {
 public:
  explicit MinimalLabelSearch(const Graph& g) : g_(g), n_(g.order()) {
    order_.resize(static_cast<std::size_t>(n_));
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return g.degree(a) < g.degree(b); });
    // Position p may only hold vertices whose degree equals the p-th smallest.
    slot_degree_.resize(static_cast<std::size_t>(n_));
    for (int p = 0; p < n_; ++p) slot_degree_[static_cast<std::size_t>(p)] = g.degree(order_[static_cast<std::size_t>(p)]);
    bits_.assign(static_cast<std::size_t>(n_ * (n_ - 1) / 2), '1');
    current_.resize(bits_.size());
    placed_.resize(static_cast<std::size_t>(n_));
  }

  CanonicalLabeling run() {
    if (n_ > 0) extend(0, 0, false);
    CanonicalLabeling out;
    out.label = std::to_string(n_) + ":" + bits_;
    out.position_of.assign(static_cast<std::size_t>(n_), -1);
    for (int p = 0; p < n_; ++p) out.position_of[static_cast<std::size_t>(best_[static_cast<std::size_t>(p)])] = p;
    return out;
  }

 private:
  // `offset` indexes the first bit of row `pos`; `less` means the prefix is
  // already strictly below the best string, so no further comparison is needed.
  void extend(int pos, std::size_t offset, bool less) {
    if (pos == n_) {
      if (less || best_.empty()) {
        bits_ = current_;
        best_ = placed_;
        ++improvements_;
      }
      return;
    }
    for (int v = 0; v < n_; ++v) {
      if (used_ >> v & 1U) continue;
      if (g_.degree(v) != slot_degree_[static_cast<std::size_t>(pos)]) continue;
      bool row_less = less;
      bool pruned = false;
      for (int q = 0; q < pos; ++q) {
        const char bit = g_.adjacent(v, placed_[static_cast<std::size_t>(q)]) ? '1' : '0';
        current_[offset + static_cast<std::size_t>(q)] = bit;
        if (!row_less && !best_.empty()) {
          const char ref = bits_[offset + static_cast<std::size_t>(q)];
          if (bit > ref) {
            pruned = true;
            break;
          }
          if (bit < ref) row_less = true;
        }
      }
      if (pruned) continue;
      placed_[static_cast<std::size_t>(pos)] = v;
      used_ |= std::uint64_t{1} << v;
      const std::uint64_t before = improvements_;
      extend(pos + 1, offset + static_cast<std::size_t>(pos), row_less);
      used_ &= ~(std::uint64_t{1} << v);
      // A new best found below shares this prefix, so the prefix is no longer below it.
      if (improvements_ != before) less = false;
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> order_;
  std::vector<int> slot_degree_;
  std::string bits_;
  std::string current_;
  std::vector<int> placed_;
  std::vector<int> best_;
  std::uint64_t used_ = 0;
  std::uint64_t improvements_ = 0;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) {
  if (g.order() > kCanonicalMaxOrder) {
    throw OrderError("canonical form supports order <= " + std::to_string(kCanonicalMaxOrder));
  }
  return MinimalLabelSearch(g).run();
}

std::string canonical_form(const Graph& g) { return canonical_labeling(g).label; }

Graph canonical_graph(const Graph& g) {
  const auto labeling = canonical_labeling(g);
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    u = labeling.position_of[static_cast<std::size_t>(u)];
    v = labeling.position_of[static_cast<std::size_t>(v)];
    edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges.begin(), edges.end());
  return Graph(g.order(), edges);
}

}  // namespace oddfactor
