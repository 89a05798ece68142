#pragma once

// The twelve end-to-end reproduction checks behind `verify-all` and the
// acceptance test binary.

#include <functional>
#include <string>
#include <vector>

namespace linial {

struct CriterionResult {
  int number = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  /// Verdicts that are measured and printed but not asserted.
  std::vector<std::string> reported;
  double seconds = 0.0;
};

struct Criterion {
  int number;
  std::string title;
  std::function<CriterionResult()> run;
};

std::vector<Criterion> acceptance_criteria();

/// Runs the selected criteria (all when empty) in order; results keep the
/// criterion order.
std::vector<CriterionResult> run_acceptance(const std::vector<int>& only = {});

}  // namespace linial
