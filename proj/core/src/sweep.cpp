#include "oddfactor/sweep.hpp"

#include "oddfactor/factors.hpp"
#include "oddfactor/generators.hpp"
#include "oddfactor/parameters.hpp"

namespace oddfactor {

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  std::vector<CorpusGraph> corpus;
  if (spec.complete_graphs) {
    for (int n = spec.corpus.n_min; n <= spec.corpus.n_max; ++n) {
      corpus.push_back({"complete(n=" + std::to_string(n) + ")", complete_graph(n), 1.0});
    }
  } else {
    corpus = random_corpus(spec.corpus);
  }

  std::vector<SweepRow> rows;
  rows.reserve(corpus.size());
  for (const auto& item : corpus) {
    SweepRow row;
    row.name = item.name;
    row.n = item.graph.order();
    row.p = item.p;
    if (row.n < 2 || row.n > spec.enumeration.cap) {
      row.skipped = true;
      row.note = row.n < 2 ? "order below 2" : "order exceeds enumeration cap";
      rows.push_back(std::move(row));
      continue;
    }
    row.t = toughness(item.graph, spec.enumeration).value;
    row.isolated = isolated_toughness(item.graph, spec.enumeration).value;
    row.isolated_variant = isolated_toughness_variant(item.graph, spec.enumeration).value;
    row.binding = binding_number(item.graph, spec.enumeration).value;
    row.factor = cp_criterion(item.graph, spec.enumeration).exists;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = "name,n,p,t,I,Iprime,bind,factor,note\n";
  for (const auto& r : rows) {
    out += "\"" + r.name + "\"," + std::to_string(r.n) + "," + (r.p < 0 ? std::string() : format_probability(r.p)) + ",";
    if (r.skipped) {
      out += ",,,,," + r.note + "\n";
      continue;
    }
    out += r.t.str() + "," + r.isolated.str() + "," + r.isolated_variant.str() + "," + r.binding.str() + "," +
           (r.factor ? "true" : "false") + "," + r.note + "\n";
  }
  return out;
}

}  // namespace oddfactor
