#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

namespace tspec {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

inline constexpr int kCriterionCount = 10;

/// Runs one acceptance criterion (1..10). Exceptions inside a criterion are turned
/// into a failed result carrying the message.
CriterionResult run_criterion(int id);

/// Runs the selected criteria (all when `only` is empty) in order, reporting each
/// result through `on_result` as soon as it is available.
std::vector<CriterionResult> run_acceptance(
    const std::set<int>& only = {},
    const std::function<void(const CriterionResult&)>& on_result = {});

/// "PASS [3] title: detail (1.2 s)"
std::string format_result(const CriterionResult& r);

}  // namespace tspec
