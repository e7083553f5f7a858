#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace mzv {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  double seconds = 0;
  double limit_seconds = 0;
  std::string detail;
};

struct AcceptanceCriterion {
  int id;
  std::string title;
  double limit_seconds;
  /// Returns pass and fills detail.
  std::function<bool(std::string &)> check;
};

const std::vector<AcceptanceCriterion> &acceptance_criteria();

/// Runs the selected criteria (all when empty); prints one PASS/FAIL line each.
std::vector<CriterionResult> run_acceptance(std::ostream &out, const std::vector<int> &only = {});

} // namespace mzv
