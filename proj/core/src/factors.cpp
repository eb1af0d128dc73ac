#include "oddfactor/factors.hpp"

#include <unordered_set>

#include "oddfactor/parameters.hpp"
#include "oddfactor/structure.hpp"

namespace oddfactor {

namespace {

void check_min_cycle(int min_cycle) {
  if (min_cycle != 3 && min_cycle != 5) {
    throw std::invalid_argument("minimum cycle length must be 3 or 5, got " + std::to_string(min_cycle));
  }
}

/// Depth-first search for a partition of the uncovered vertices into edges
/// and odd cycles. Always branches on the lowest uncovered vertex: matching
/// edges in ascending neighbor order first, then cycles through it.
class FactorSearch {
 public:
  FactorSearch(const Graph& g, int min_cycle) : adj_(g.adjacency()), n_(g.order()), min_cycle_(min_cycle) {}

  std::optional<FactorDecomposition> run(std::uint64_t all) {
    if (!solve(all)) return std::nullopt;
    return FactorDecomposition{min_cycle_, pieces_};
  }

 private:
  bool solve(std::uint64_t uncovered) {
    if (uncovered == 0) return true;
    if (failed_.contains(uncovered)) return false;
    for (std::uint64_t u = uncovered; u != 0; u &= u - 1) {
      if ((adj_[static_cast<std::size_t>(std::countr_zero(u))] & uncovered) == 0) {
        failed_.insert(uncovered);
        return false;
      }
    }
    const int anchor = std::countr_zero(uncovered);
    const std::uint64_t anchor_bit = std::uint64_t{1} << anchor;
    for (std::uint64_t c = adj_[static_cast<std::size_t>(anchor)] & uncovered; c != 0; c &= c - 1) {
      const int mate = std::countr_zero(c);
      pieces_.emplace_back(FactorEdge{anchor, mate});
      if (solve(uncovered & ~anchor_bit & ~(std::uint64_t{1} << mate))) return true;
      pieces_.pop_back();
    }
    path_.assign(1, anchor);
    if (grow_cycle(uncovered, anchor_bit)) return true;
    failed_.insert(uncovered);
    return false;
  }

  bool grow_cycle(std::uint64_t uncovered, std::uint64_t used) {
    const int anchor = path_.front();
    const int last = path_.back();
    const int length = static_cast<int>(path_.size());
    // Each cycle is seen in both directions; keep the one with path_[1] < last.
    if (length >= min_cycle_ && length % 2 == 1 && path_[1] < last &&
        (adj_[static_cast<std::size_t>(last)] >> anchor & 1U)) {
      pieces_.emplace_back(FactorCycle{path_});
      const auto saved = path_;
      if (solve(uncovered & ~used)) return true;
      path_ = saved;
      pieces_.pop_back();
    }
    if (length == n_) return false;
    for (std::uint64_t c = adj_[static_cast<std::size_t>(last)] & uncovered & ~used; c != 0; c &= c - 1) {
      const int next = std::countr_zero(c);
      path_.push_back(next);
      if (grow_cycle(uncovered, used | (std::uint64_t{1} << next))) return true;
      path_.pop_back();
    }
    return false;
  }

  const std::vector<std::uint64_t>& adj_;
  int n_;
  int min_cycle_;
  std::vector<FactorComponent> pieces_;
  std::vector<int> path_;
  std::unordered_set<std::uint64_t> failed_;
};

}  // namespace

std::string render(const FactorDecomposition& f) {
  std::string out;
  for (const auto& piece : f.components) {
    if (const auto* e = std::get_if<FactorEdge>(&piece)) {
      out += "edge " + std::to_string(e->u) + " " + std::to_string(e->v) + "\n";
    } else {
      out += "cycle";
      for (int v : std::get<FactorCycle>(piece).vertices) out += " " + std::to_string(v);
      out += "\n";
    }
  }
  return out;
}

CriterionDecision cp_criterion(const Graph& g, const EnumerationOptions& options) {
  check_enumeration_order(g, 1, options);
  const auto& adj = g.adjacency();
  const std::uint64_t all = g.vertices().bits();
  // c_tc(G-S) <= n - |S|, so a violation needs |S| <= (n-1)/2.
  const auto found = first_subset(g.order(), (g.order() - 1) / 2, options, [&](std::uint64_t s) {
    return kernel::triangular_cacti(adj, all & ~s) > std::popcount(s);
  });
  if (!found) return {true, std::nullopt};
  const VertexSet s(*found);
  return {false, Violation{s, count_tc(g, s)}};
}

TutteDecision fractional_tutte(const Graph& g, const EnumerationOptions& options) {
  check_enumeration_order(g, 1, options);
  const auto& adj = g.adjacency();
  const std::uint64_t all = g.vertices().bits();
  const auto found = first_subset(g.order(), (g.order() - 1) / 2, options, [&](std::uint64_t s) {
    return kernel::isolated(adj, all & ~s) > std::popcount(s);
  });
  if (!found) return {true, std::nullopt};
  const VertexSet s(*found);
  return {false, IsolationViolation{s, count_c_iso(g, s).isolated}};
}

std::optional<FactorDecomposition> find_factor(const Graph& g, int min_cycle, const FactorSearchOptions& options) {
  check_min_cycle(min_cycle);
  if (g.order() < 1) throw OrderError("factor search needs order >= 1");
  if (g.order() > options.cap) {
    throw OrderError("order " + std::to_string(g.order()) + " exceeds construction cap " +
                     std::to_string(options.cap));
  }
  return FactorSearch(g, min_cycle).run(g.vertices().bits());
}

std::string_view fault_name(FactorFault fault) {
  switch (fault) {
    case FactorFault::kNone: return "ok";
    case FactorFault::kVertexOutOfRange: return "vertex out of range";
    case FactorFault::kVertexRepeated: return "vertex covered twice";
    case FactorFault::kVertexUncovered: return "vertex uncovered";
    case FactorFault::kMissingEdge: return "component uses a non-edge";
    case FactorFault::kCycleTooShort: return "cycle shorter than minimum";
    case FactorFault::kEvenCycle: return "cycle of even length";
  }
  return "unknown";
}

FactorCheck validate_factor(const Graph& g, const FactorDecomposition& f, int min_cycle) {
  VertexSet covered;
  auto cover = [&](int v) -> FactorFault {
    if (v < 0 || v >= g.order()) return FactorFault::kVertexOutOfRange;
    if (covered.contains(v)) return FactorFault::kVertexRepeated;
    covered.insert(v);
    return FactorFault::kNone;
  };
  for (const auto& piece : f.components) {
    if (const auto* e = std::get_if<FactorEdge>(&piece)) {
      for (int v : {e->u, e->v}) {
        if (auto fault = cover(v); fault != FactorFault::kNone) return {fault};
      }
      if (!g.adjacent(e->u, e->v)) return {FactorFault::kMissingEdge};
      continue;
    }
    const auto& cycle = std::get<FactorCycle>(piece).vertices;
    for (int v : cycle) {
      if (auto fault = cover(v); fault != FactorFault::kNone) return {fault};
    }
    const int length = static_cast<int>(cycle.size());
    if (length % 2 == 0) return {FactorFault::kEvenCycle};
    if (length < min_cycle || length < 3) return {FactorFault::kCycleTooShort};
    for (int i = 0; i < length; ++i) {
      if (!g.adjacent(cycle[static_cast<std::size_t>(i)], cycle[static_cast<std::size_t>((i + 1) % length)])) {
        return {FactorFault::kMissingEdge};
      }
    }
  }
  if (covered != g.vertices()) return {FactorFault::kVertexUncovered};
  return {};
}

}  // namespace oddfactor
