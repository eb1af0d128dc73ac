#include "oddfactor/generators.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace oddfactor {

namespace {

constexpr std::array<std::string_view, 7> kFamilyNames = {"complete", "path", "cycle", "gm",
                                                         "hm",       "random", "cactus"};

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

void add_clique(std::vector<Edge>& edges, int first, int count) {
  for (int u = first; u < first + count; ++u)
    for (int v = u + 1; v < first + count; ++v) edges.emplace_back(u, v);
}

/// K on 0..m-2 joined to `extra` further vertices, which form disjoint
/// triangles when `triangles` is set.
Graph join_clique(int m, int extra, bool triangles) {
  require(m >= 2, "family parameter m must be >= 2");
  const int k = m - 1;
  const int order = k + extra;
  require(order <= Graph::kMaxOrder, "order " + std::to_string(order) + " exceeds maximum");
  std::vector<Edge> edges;
  add_clique(edges, 0, k);
  if (triangles) {
    for (int t = 0; t < m; ++t) add_clique(edges, k + 3 * t, 3);
  }
  for (int u = 0; u < k; ++u)
    for (int v = k; v < order; ++v) edges.emplace_back(u, v);
  return Graph(order, edges);
}

}  // namespace

std::string_view family_name(Family f) { return kFamilyNames[static_cast<std::size_t>(f)]; }

std::optional<Family> parse_family(std::string_view name) {
  for (std::size_t i = 0; i < kFamilyNames.size(); ++i) {
    if (kFamilyNames[i] == name) return static_cast<Family>(i);
  }
  return std::nullopt;
}

Graph complete_graph(int n) {
  require(n >= 1 && n <= Graph::kMaxOrder, "complete graph needs 1 <= n <= 64");
  std::vector<Edge> edges;
  add_clique(edges, 0, n);
  return Graph(n, edges);
}

Graph path_graph(int n) {
  require(n >= 1 && n <= Graph::kMaxOrder, "path needs 1 <= n <= 64");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  require(n >= 3 && n <= Graph::kMaxOrder, "cycle needs 3 <= n <= 64");
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

Graph gm_graph(int m) { return join_clique(m, m, false); }

Graph hm_graph(int m) { return join_clique(m, 3 * m, true); }

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  require(n >= 1 && n <= Graph::kMaxOrder, "random graph needs 1 <= n <= 64");
  require(p >= 0.0 && p <= 1.0, "edge probability must lie in [0, 1]");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (x < p) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_graph(n, p, rng);
}

Graph cactus_graph(int blocks, std::uint64_t seed) {
  require(blocks >= 0 && 2 * blocks + 1 <= Graph::kMaxOrder, "cactus block count out of range");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  int order = 1;
  for (int b = 0; b < blocks; ++b) {
    const int anchor = static_cast<int>(rng() % static_cast<std::uint64_t>(order));
    edges.emplace_back(anchor, order);
    edges.emplace_back(anchor, order + 1);
    edges.emplace_back(order, order + 1);
    order += 2;
  }
  return Graph(order, edges);
}

Graph bowtie() {
  const std::vector<Edge> edges = {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}};
  return Graph(5, edges);
}

Graph generate(const GeneratorSpec& spec) {
  switch (spec.family) {
    case Family::kComplete: return complete_graph(spec.n);
    case Family::kPath: return path_graph(spec.n);
    case Family::kCycle: return cycle_graph(spec.n);
    case Family::kGm: return gm_graph(spec.m);
    case Family::kHm: return hm_graph(spec.m);
    case Family::kRandom:
      require(spec.seed.has_value(), "random family requires a seed");
      return random_graph(spec.n, spec.p, *spec.seed);
    case Family::kCactus:
      require(spec.seed.has_value(), "cactus family requires a seed");
      return cactus_graph(spec.blocks, *spec.seed);
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace oddfactor
