#include "oddfactor/exceptions.hpp"

#include <map>
#include <thread>

#include "oddfactor/canonical.hpp"
#include "oddfactor/factors.hpp"
#include "oddfactor/parameters.hpp"

namespace oddfactor {

namespace {

struct PartialScan {
  std::uint64_t without_factor = 0;
  std::uint64_t exceptions = 0;
  std::map<std::string, ExceptionClass> classes;
};

void scan_range(int n, std::uint64_t begin, std::uint64_t end, const Rational& threshold, PartialScan& out) {
  const EnumerationOptions sequential{};
  for (std::uint64_t code = begin; code < end; ++code) {
    const Graph g = graph_from_code(n, code);
    if (cp_criterion(g, sequential).exists) continue;
    ++out.without_factor;
    const auto iprime = isolated_toughness_variant(g, sequential).value;
    if (iprime <= threshold) continue;
    ++out.exceptions;
    auto label = canonical_form(g);
    if (!out.classes.contains(label)) {
      out.classes.emplace(label, ExceptionClass{label, canonical_graph(g), iprime});
    }
  }
}

}  // namespace

Graph graph_from_code(int n, std::uint64_t code) {
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
  int bit = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v, ++bit) {
      if ((code >> bit) & 1U) {
        adj[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        adj[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
      }
    }
  }
  return Graph::from_adjacency(std::move(adj));
}

ExceptionScan enumerate_exceptions(int order, int jobs, Rational threshold) {
  if (order != 7) throw OrderError("exception enumeration supports order 7 only");
  const int pairs = order * (order - 1) / 2;
  const std::uint64_t total = std::uint64_t{1} << pairs;
  const auto workers = static_cast<std::uint64_t>(std::max(jobs, 1));

  std::vector<PartialScan> partial(workers);
  {
    std::vector<std::jthread> threads;
    for (std::uint64_t w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        scan_range(order, total * w / workers, total * (w + 1) / workers, threshold, partial[w]);
      });
    }
  }

  ExceptionScan scan;
  scan.order = order;
  scan.threshold = threshold;
  scan.labeled_graphs = total;
  std::map<std::string, ExceptionClass> merged;
  for (auto& p : partial) {
    scan.labeled_without_factor += p.without_factor;
    scan.labeled_exceptions += p.exceptions;
    merged.merge(p.classes);
  }
  for (auto& [label, cls] : merged) scan.classes.push_back(std::move(cls));
  return scan;
}

}  // namespace oddfactor
