#include "oddfactor/parameters.hpp"

#include <array>

#include "oddfactor/structure.hpp"

namespace oddfactor {

namespace {

constexpr std::array<std::string_view, 4> kNames = {"toughness", "isolated_toughness",
                                                     "isolated_toughness_variant", "binding_number"};
constexpr std::array<std::string_view, 4> kSelectors = {"t", "i", "iprime", "bind"};

bool at_least(const SubsetRatio& best, std::int64_t num, std::int64_t den) {
  return static_cast<__int128>(num) * best.den >= static_cast<__int128>(best.num) * den;
}

ParameterResult finish(Parameter p, const std::optional<SubsetRatio>& best) {
  if (!best) throw std::logic_error("no feasible subset for " + std::string(parameter_name(p)));
  return {p, Rational(best->num, best->den), VertexSet(best->mask)};
}

}  // namespace

std::string_view parameter_name(Parameter p) { return kNames[static_cast<std::size_t>(p)]; }
std::string_view parameter_selector(Parameter p) { return kSelectors[static_cast<std::size_t>(p)]; }

std::optional<Parameter> parse_parameter_selector(std::string_view selector) {
  for (std::size_t i = 0; i < kSelectors.size(); ++i) {
    if (kSelectors[i] == selector) return static_cast<Parameter>(i);
  }
  return std::nullopt;
}

void check_enumeration_order(const Graph& g, int min_order, const EnumerationOptions& options) {
  if (options.cap < 1 || options.cap > EnumerationOptions::kHardCap) {
    throw OrderError("enumeration cap must lie in 1.." + std::to_string(EnumerationOptions::kHardCap));
  }
  if (g.order() < min_order) {
    throw OrderError("order " + std::to_string(g.order()) + " below minimum " + std::to_string(min_order));
  }
  if (g.order() > options.cap) {
    throw OrderError("order " + std::to_string(g.order()) + " exceeds enumeration cap " +
                     std::to_string(options.cap));
  }
}

ParameterResult toughness(const Graph& g, const EnumerationOptions& options) {
  check_enumeration_order(g, 2, options);
  if (g.is_complete()) return {Parameter::kToughness, Rational::infinity(), {}};
  const int n = g.order();
  const auto& adj = g.adjacency();
  const std::uint64_t all = g.vertices().bits();
  auto eval = [&](std::uint64_t s) -> std::optional<SubsetRatio> {
    const int c = kernel::component_counts(adj, all & ~s).components;
    if (c < 2) return std::nullopt;
    return SubsetRatio{std::popcount(s), c, s};
  };
  // c(G-S) <= n - |S|
  auto stop = [n](int k, const SubsetRatio& best) { return n - k < 2 || at_least(best, k, n - k); };
  return finish(Parameter::kToughness, minimize_over_subsets(n, options, eval, stop));
}

ParameterResult isolated_toughness(const Graph& g, const EnumerationOptions& options) {
  check_enumeration_order(g, 2, options);
  if (g.is_complete()) return {Parameter::kIsolatedToughness, Rational::infinity(), {}};
  const int n = g.order();
  const auto& adj = g.adjacency();
  const std::uint64_t all = g.vertices().bits();
  auto eval = [&](std::uint64_t s) -> std::optional<SubsetRatio> {
    const int iso = kernel::isolated(adj, all & ~s);
    if (iso < 2) return std::nullopt;
    return SubsetRatio{std::popcount(s), iso, s};
  };
  auto stop = [n](int k, const SubsetRatio& best) { return n - k < 2 || at_least(best, k, n - k); };
  return finish(Parameter::kIsolatedToughness, minimize_over_subsets(n, options, eval, stop));
}

ParameterResult isolated_toughness_variant(const Graph& g, const EnumerationOptions& options) {
  check_enumeration_order(g, 2, options);
  if (g.is_complete()) return {Parameter::kIsolatedToughnessVariant, Rational::infinity(), {}};
  const int n = g.order();
  const auto& adj = g.adjacency();
  const std::uint64_t all = g.vertices().bits();
  auto eval = [&](std::uint64_t s) -> std::optional<SubsetRatio> {
    const int iso = kernel::isolated(adj, all & ~s);
    if (iso < 2) return std::nullopt;
    return SubsetRatio{std::popcount(s), iso - 1, s};
  };
  auto stop = [n](int k, const SubsetRatio& best) { return n - k < 2 || at_least(best, k, n - k - 1); };
  return finish(Parameter::kIsolatedToughnessVariant, minimize_over_subsets(n, options, eval, stop));
}

ParameterResult binding_number(const Graph& g, const EnumerationOptions& options) {
  check_enumeration_order(g, 2, options);
  const int n = g.order();
  const auto& adj = g.adjacency();
  const std::uint64_t all = g.vertices().bits();
  auto eval = [&](std::uint64_t s) -> std::optional<SubsetRatio> {
    if (s == 0) return std::nullopt;
    const std::uint64_t nb = kernel::neighborhood(adj, s);
    if (nb == all) return std::nullopt;
    return SubsetRatio{std::popcount(nb), std::popcount(s), s};
  };
  // No monotone layer bound exists here; every subset is visited.
  auto stop = [](int, const SubsetRatio&) { return false; };
  return finish(Parameter::kBindingNumber, minimize_over_subsets(n, options, eval, stop));
}

ParameterResult compute_parameter(Parameter p, const Graph& g, const EnumerationOptions& options) {
  switch (p) {
    case Parameter::kToughness: return toughness(g, options);
    case Parameter::kIsolatedToughness: return isolated_toughness(g, options);
    case Parameter::kIsolatedToughnessVariant: return isolated_toughness_variant(g, options);
    case Parameter::kBindingNumber: return binding_number(g, options);
  }
  throw std::invalid_argument("unknown parameter");
}

std::optional<Rational> ratio_at(Parameter p, const Graph& g, VertexSet s) {
  const auto counts = count_c_iso(g, s);
  switch (p) {
    case Parameter::kToughness:
      if (counts.components < 2) return std::nullopt;
      return Rational(s.size(), counts.components);
    case Parameter::kIsolatedToughness:
      if (counts.isolated < 2) return std::nullopt;
      return Rational(s.size(), counts.isolated);
    case Parameter::kIsolatedToughnessVariant:
      if (counts.isolated < 2) return std::nullopt;
      return Rational(s.size(), counts.isolated - 1);
    case Parameter::kBindingNumber: {
      const VertexSet nb = neighborhood(g, s);
      if (s.empty() || nb == g.vertices()) return std::nullopt;
      return Rational(nb.size(), s.size());
    }
  }
  return std::nullopt;
}

}  // namespace oddfactor
