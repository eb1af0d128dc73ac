#include "oddfactor/report.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

#include "json.hpp"

namespace oddfactor {

std::string_view status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kSkipped: return "skipped";
  }
  return "unknown";
}

void CheckReport::add_exact(int criterion, std::string name, std::string anchor, const Rational& expected,
                            const Rational& actual, std::string witness, double elapsed_seconds) {
  add({criterion, std::move(name), std::move(anchor), expected == actual ? CheckStatus::kPass : CheckStatus::kFail,
       expected.str(), actual.str(), std::move(witness), elapsed_seconds});
}

void CheckReport::add_count(int criterion, std::string name, std::string anchor, long violations,
                            std::string witness, double elapsed_seconds, std::string population) {
  std::string actual = std::to_string(violations) + " violations";
  if (!population.empty()) actual += " in " + population;
  add({criterion, std::move(name), std::move(anchor), violations == 0 ? CheckStatus::kPass : CheckStatus::kFail,
       "0 violations", std::move(actual), std::move(witness), elapsed_seconds});
}

std::vector<CheckRow> CheckReport::sorted_rows() const {
  auto out = rows_;
  std::stable_sort(out.begin(), out.end(), [](const CheckRow& a, const CheckRow& b) {
    return a.criterion != b.criterion ? a.criterion < b.criterion : a.name < b.name;
  });
  return out;
}

CheckStatus CheckReport::criterion_status(int criterion) const {
  bool any = false;
  bool skipped = false;
  for (const auto& row : rows_) {
    if (row.criterion != criterion) continue;
    any = true;
    if (row.status == CheckStatus::kFail) return CheckStatus::kFail;
    if (row.status == CheckStatus::kSkipped) skipped = true;
  }
  return !any || skipped ? CheckStatus::kSkipped : CheckStatus::kPass;
}

bool CheckReport::all_passed() const {
  return !rows_.empty() && std::all_of(rows_.begin(), rows_.end(),
                                       [](const CheckRow& r) { return r.status == CheckStatus::kPass; });
}

std::string CheckReport::machine() const {
  nlohmann::ordered_json doc;
  doc["schema"] = "oddfactor-check-report/1";
  std::set<int> criteria;
  auto checks = nlohmann::ordered_json::array();
  for (const auto& row : sorted_rows()) {
    criteria.insert(row.criterion);
    checks.push_back({{"criterion", row.criterion},
                      {"name", row.name},
                      {"anchor", row.anchor},
                      {"status", status_name(row.status)},
                      {"expected", row.expected},
                      {"actual", row.actual},
                      {"witness", row.witness}});
  }
  auto summary = nlohmann::ordered_json::array();
  for (int c : criteria) summary.push_back({{"criterion", c}, {"status", status_name(criterion_status(c))}});
  doc["criteria"] = std::move(summary);
  doc["checks"] = std::move(checks);
  doc["all_passed"] = all_passed();
  return doc.dump(2) + "\n";
}

std::string CheckReport::human() const {
  std::string out;
  char line[96];
  for (const auto& row : sorted_rows()) {
    std::snprintf(line, sizeof line, "[%-7s] C%-2d %9.3fs  ", std::string(status_name(row.status)).c_str(),
                  row.criterion, row.elapsed_seconds);
    out += line;
    out += row.name + "\n";
    out += "    claim:    " + row.anchor + "\n";
    out += "    expected: " + row.expected + "\n";
    out += "    actual:   " + row.actual + "\n";
    if (!row.witness.empty()) out += "    witness:  " + row.witness + "\n";
  }
  std::set<int> criteria;
  for (const auto& row : rows_) criteria.insert(row.criterion);
  out += "\n";
  for (int c : criteria) {
    out += "criterion " + std::to_string(c) + ": " + std::string(status_name(criterion_status(c))) + "\n";
  }
  out += all_passed() ? "ALL PASS\n" : "NOT ALL PASS\n";
  return out;
}

}  // namespace oddfactor
