#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "oddfactor/graph.hpp"
#include "oddfactor/subset_search.hpp"

namespace oddfactor {

struct FactorEdge {
  int u = 0;
  int v = 0;
  friend bool operator==(const FactorEdge&, const FactorEdge&) = default;
};

/// Vertices in cyclic order; the closing edge runs from back() to front().
struct FactorCycle {
  std::vector<int> vertices;
  friend bool operator==(const FactorCycle&, const FactorCycle&) = default;
};

using FactorComponent = std::variant<FactorEdge, FactorCycle>;

/// Spanning subgraph whose components are single edges and odd cycles of
/// length >= min_cycle.
struct FactorDecomposition {
  int min_cycle = 5;
  std::vector<FactorComponent> components;
};

/// "edge u v" / "cycle a b c ..." lines, one per component.
std::string render(const FactorDecomposition& f);

/// S with c_tc(G - S) = tc_count >= |S| + 1.
struct Violation {
  VertexSet set;
  int tc_count = 0;
};

/// S with iso(G - S) = isolated >= |S| + 1.
struct IsolationViolation {
  VertexSet set;
  int isolated = 0;
};

struct CriterionDecision {
  bool exists = false;
  std::optional<Violation> violation;
};

struct TutteDecision {
  bool exists = false;
  std::optional<IsolationViolation> violation;
};

/// Existence of a {K2, C_{2i+1} : i >= 2}-factor: no S with c_tc(G-S) > |S|.
/// The reported violation is the smallest such S, then the smallest bitmask.
/// Throws OrderError when order < 1 or order > options.cap.
CriterionDecision cp_criterion(const Graph& g, const EnumerationOptions& options = {});

/// Existence of a {K2, C_{2i+1} : i >= 1}-factor: no S with iso(G-S) > |S|.
TutteDecision fractional_tutte(const Graph& g, const EnumerationOptions& options = {});

struct FactorSearchOptions {
  static constexpr int kDefaultCap = 16;
  int cap = kDefaultCap;
};

/// Backtracking construction. min_cycle must be 3 or 5. Returns nullopt when
/// no factor exists. Throws OrderError above options.cap and
/// std::invalid_argument for other min_cycle values.
std::optional<FactorDecomposition> find_factor(const Graph& g, int min_cycle, const FactorSearchOptions& options = {});

enum class FactorFault {
  kNone,
  kVertexOutOfRange,
  kVertexRepeated,
  kVertexUncovered,
  kMissingEdge,
  kCycleTooShort,
  kEvenCycle,
};

std::string_view fault_name(FactorFault fault);

struct FactorCheck {
  FactorFault fault = FactorFault::kNone;
  explicit operator bool() const { return fault == FactorFault::kNone; }
};

FactorCheck validate_factor(const Graph& g, const FactorDecomposition& f, int min_cycle);

}  // namespace oddfactor
