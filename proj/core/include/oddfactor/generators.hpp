#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>

#include "oddfactor/graph.hpp"

namespace oddfactor {

enum class Family { kComplete, kPath, kCycle, kGm, kHm, kRandom, kCactus };

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

/// Parameters for generate(). Only the fields relevant to `family` are read:
/// complete/path/cycle/random use n, gm/hm use m, random uses p, cactus uses
/// blocks, and random/cactus require seed.
struct GeneratorSpec {
  Family family = Family::kComplete;
  int n = 0;
  int m = 0;
  double p = 0.0;
  int blocks = 0;
  std::optional<std::uint64_t> seed;
};

/// Throws std::invalid_argument for parameters outside the family's domain.
Graph generate(const GeneratorSpec& spec);

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);

// K = complete graph on vertices 0..m-2. gm(m) adds m independent vertices
// joined to all of K (order 2m-1); hm(m) adds m disjoint triangles whose
// vertices are all joined to all of K (order 4m-1).
Graph gm_graph(int m);
Graph hm_graph(int m);

// Seeded families draw from std::mt19937_64 constructed with the seed.
//
// random_graph: pairs are scanned (0,1),(0,2),...,(n-2,n-1); each pair takes
// one draw x and the edge is present iff (x >> 11) * 2^-53 < p.
Graph random_graph(int n, double p, std::uint64_t seed);
Graph random_graph(int n, double p, std::mt19937_64& rng);

// cactus_graph: start from vertex 0; for each block draw x, attach a new
// triangle {a, k, k+1} at anchor a = x mod (current order), k = current order.
Graph cactus_graph(int blocks, std::uint64_t seed);

/// Two triangles {0,1,2} and {0,3,4} sharing vertex 0.
Graph bowtie();

}  // namespace oddfactor
