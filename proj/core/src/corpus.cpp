#include "oddfactor/corpus.hpp"

#include <cstdio>
#include <map>
#include <random>
#include <stdexcept>

#include "oddfactor/canonical.hpp"
#include "oddfactor/generators.hpp"
#include "oddfactor/structure.hpp"

namespace oddfactor {

std::vector<CorpusGraph> random_corpus(const CorpusSpec& spec) {
  if (spec.n_min < 1 || spec.n_max < spec.n_min || spec.n_max > Graph::kMaxOrder) {
    throw std::invalid_argument("corpus order range invalid");
  }
  if (spec.count_per_order < 0 || spec.p_schedule.empty()) {
    throw std::invalid_argument("corpus needs a non-negative count and a probability schedule");
  }
  std::mt19937_64 rng(spec.seed);
  std::vector<CorpusGraph> out;
  out.reserve(static_cast<std::size_t>((spec.n_max - spec.n_min + 1) * spec.count_per_order));
  for (int n = spec.n_min; n <= spec.n_max; ++n) {
    for (int i = 0; i < spec.count_per_order; ++i) {
      const double p = spec.p_schedule[static_cast<std::size_t>(i) % spec.p_schedule.size()];
      out.push_back({"random(n=" + std::to_string(n) + ",p=" + format_probability(p) + ",#" + std::to_string(i) + ")",
                     random_graph(n, p, rng), p});
    }
  }
  return out;
}

std::vector<Graph> all_graphs(int order) {
  if (order < 1 || order > 9) throw OrderError("all_graphs supports orders 1..9");
  std::vector<Graph> level = {Graph(1)};
  for (int n = 2; n <= order; ++n) {
    std::map<std::string, Graph> classes;
    for (const Graph& base : level) {
      for (std::uint64_t attach = 0; attach < (std::uint64_t{1} << (n - 1)); ++attach) {
        std::vector<std::uint64_t> adj = base.adjacency();
        adj.push_back(attach);
        for (std::uint64_t a = attach; a != 0; a &= a - 1) {
          adj[static_cast<std::size_t>(std::countr_zero(a))] |= std::uint64_t{1} << (n - 1);
        }
        const Graph g = Graph::from_adjacency(std::move(adj));
        auto label = canonical_form(g);
        if (!classes.contains(label)) classes.emplace(std::move(label), canonical_graph(g));
      }
    }
    level.clear();
    for (auto& [label, g] : classes) level.push_back(std::move(g));
  }
  return level;
}

std::vector<CorpusGraph> connected_graphs_up_to(int max_order) {
  std::vector<CorpusGraph> out;
  for (int n = 1; n <= max_order; ++n) {
    int index = 0;
    for (Graph& g : all_graphs(n)) {
      if (components(g).size() != 1) continue;
      out.push_back({"connected(n=" + std::to_string(n) + ",#" + std::to_string(index++) + ")", std::move(g), -1.0});
    }
  }
  return out;
}

std::string format_probability(double p) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.6g", p);
  return buffer;
}

}  // namespace oddfactor
