#pragma once

#include <cstdint>

#include "oddfactor/corpus.hpp"
#include "oddfactor/report.hpp"
#include "oddfactor/subset_search.hpp"

namespace oddfactor {

/// Configuration of the full verification run. Criterion numbers in the
/// report:
///   1  t(gm(m)) = (m-1)/m                 2  I(hm(m)) = (3m-1)/m
///   3  I'(hm(m)) = (3m-1)/(m-1)           4  bind(hm(m)) = bind(bowtie) = 4/3
///   5  criterion vs backtracking oracles  6  sufficient conditions imply a factor
///   7  bounds on factor-free graphs       8  t <= I <= I', bind <= I
///   9  I >= 1, I' > 1, bind >= 1 and the odd-cycle-3 factor coincide
///   10 order-7 exception classes          11 report identical across job counts
struct PaperCheckConfig {
  static constexpr std::uint64_t kDefaultSeed = 20220101;

  int m_max = 5;
  int connected_max_order = 7;
  /// Primary random corpus (10,000 graphs on 5..9 vertices by default).
  CorpusSpec corpus{5, 9, 2000, {0.2, 0.3, 0.4, 0.5, 0.6, 0.75}, kDefaultSeed};
  /// Larger graphs for the order >= 16 bound.
  CorpusSpec supplementary{16, 18, 12, {0.15, 0.25, 0.35, 0.5}, kDefaultSeed + 1};
  int cap = EnumerationOptions::kDefaultCap;
  int jobs = 1;
  bool run_exceptions = true;
  /// Re-run criteria 1-10 with a different job count and compare reports.
  bool check_determinism = true;
  int determinism_jobs = 4;
};

CheckReport run_paper_checks(const PaperCheckConfig& config);

}  // namespace oddfactor
