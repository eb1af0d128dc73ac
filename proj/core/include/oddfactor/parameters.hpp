#pragma once

#include <optional>
#include <string_view>

#include "oddfactor/graph.hpp"
#include "oddfactor/rational.hpp"
#include "oddfactor/subset_search.hpp"

namespace oddfactor {

enum class Parameter {
  kToughness,                 // min |S| / c(G-S)        over c(G-S) >= 2
  kIsolatedToughness,         // min |S| / iso(G-S)      over iso(G-S) >= 2
  kIsolatedToughnessVariant,  // min |S| / (iso(G-S)-1)  over iso(G-S) >= 2
  kBindingNumber,             // min |N(S)| / |S|        over S != {}, N(S) != V
};

std::string_view parameter_name(Parameter p);
/// CLI selector: "t", "i", "iprime", "bind".
std::string_view parameter_selector(Parameter p);
std::optional<Parameter> parse_parameter_selector(std::string_view selector);

struct ParameterResult {
  Parameter parameter;
  Rational value;
  /// Minimizing set; empty when value is infinite.
  VertexSet witness;
};

// Exact values by subset enumeration. The first three are +inf on complete
// graphs. Among minimizers the witness has the fewest vertices, then the
// smallest bitmask. Throws OrderError when order < 2 or order > options.cap.
ParameterResult toughness(const Graph& g, const EnumerationOptions& options = {});
ParameterResult isolated_toughness(const Graph& g, const EnumerationOptions& options = {});
ParameterResult isolated_toughness_variant(const Graph& g, const EnumerationOptions& options = {});
ParameterResult binding_number(const Graph& g, const EnumerationOptions& options = {});

ParameterResult compute_parameter(Parameter p, const Graph& g, const EnumerationOptions& options = {});

/// The defining ratio at s, or nullopt when s violates the side condition.
std::optional<Rational> ratio_at(Parameter p, const Graph& g, VertexSet s);

/// Throws OrderError unless min_order <= g.order() <= options.cap <= hard cap.
void check_enumeration_order(const Graph& g, int min_order, const EnumerationOptions& options);

}  // namespace oddfactor
