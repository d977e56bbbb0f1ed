#pragma once

#include <optional>
#include <string>
#include <vector>

namespace pam {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Runs one acceptance criterion (1..10). `max_n`, when set, caps every
/// brute-force enumeration depth; formula-only ranges are unaffected.
/// Throws std::out_of_range for an unknown id.
CriterionResult run_criterion(int id, std::optional<int> max_n = std::nullopt);

std::vector<CriterionResult> run_all_criteria(std::optional<int> max_n = std::nullopt);

inline constexpr int kCriterionCount = 10;

}  // namespace pam
