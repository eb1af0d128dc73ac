// Acceptance gate: one line per criterion, exit status 0 iff all pass.

#include <cstdio>
#include <iostream>

#include "oddfactor/paper_checks.hpp"
#include "oddfactor/report.hpp"

int main() {
  using namespace oddfactor;
  const PaperCheckConfig config;
  const CheckReport report = run_paper_checks(config);

  bool ok = true;
  for (int c = 1; c <= 11; ++c) {
    const CheckStatus s = report.criterion_status(c);
    ok &= s == CheckStatus::kPass;
    std::string detail;
    for (const auto& row : report.sorted_rows()) {
      if (row.criterion != c || row.status == CheckStatus::kPass) continue;
      if (!detail.empty()) detail += "; ";
      detail += row.name + " (expected " + row.expected + ", got " + row.actual + ")";
    }
    std::printf("criterion %2d: %s%s%s\n", c, s == CheckStatus::kPass ? "PASS" : s == CheckStatus::kFail ? "FAIL" : "SKIPPED",
                detail.empty() ? "" : "  ", detail.c_str());
  }
  std::cout << "\n" << report.human();
  return ok ? 0 : 1;
}
