#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oddfactor/corpus.hpp"
#include "oddfactor/rational.hpp"
#include "oddfactor/subset_search.hpp"

namespace oddfactor {

struct SweepSpec {
  CorpusSpec corpus;
  /// Sample complete graphs K_n for n in [n_min, n_max] instead of random ones.
  bool complete_graphs = false;
  EnumerationOptions enumeration;
};

struct SweepRow {
  std::string name;
  int n = 0;
  double p = -1.0;
  bool skipped = false;
  std::string note;
  Rational t, isolated, isolated_variant, binding;
  bool factor = false;
};

/// One row per corpus graph; graphs outside the enumeration cap (or below
/// order 2) are kept as skipped rows with a note.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

/// CSV with header name,n,p,t,I,Iprime,bind,factor,note. Rationals as p/q.
std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace oddfactor
