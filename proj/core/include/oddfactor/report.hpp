#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "oddfactor/rational.hpp"

namespace oddfactor {

enum class CheckStatus { kPass, kFail, kSkipped };

std::string_view status_name(CheckStatus s);

struct CheckRow {
  int criterion = 0;
  std::string name;
  /// The claim being checked, stated as a formula.
  std::string anchor;
  CheckStatus status = CheckStatus::kSkipped;
  std::string expected;
  std::string actual;
  /// Witness, certificate or first counterexample; may be empty.
  std::string witness;
  double elapsed_seconds = 0.0;
};

class CheckReport {
 public:
  void add(CheckRow row) { rows_.push_back(std::move(row)); }
  /// Pass iff actual == expected exactly.
  void add_exact(int criterion, std::string name, std::string anchor, const Rational& expected,
                 const Rational& actual, std::string witness, double elapsed_seconds);
  /// Pass iff violations == 0.
  void add_count(int criterion, std::string name, std::string anchor, long violations, std::string witness,
                 double elapsed_seconds, std::string population = {});

  const std::vector<CheckRow>& rows() const { return rows_; }
  /// Rows ordered by (criterion, name).
  std::vector<CheckRow> sorted_rows() const;

  /// Pass when every row of the criterion passes; skipped rows make it skipped.
  CheckStatus criterion_status(int criterion) const;
  bool all_passed() const;

  /// JSON document without timings; byte-identical for identical results.
  std::string machine() const;
  /// Aligned text table including elapsed times.
  std::string human() const;

 private:
  std::vector<CheckRow> rows_;
};

}  // namespace oddfactor
