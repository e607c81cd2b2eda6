#pragma once

#include <string>
#include <vector>

namespace beurling::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double measured = 0.0;  // headline figure of the criterion
  std::string detail;
  double seconds = 0.0;
};

struct Options {
  int threads = 1;
};

int CriterionCount();
const char* CriterionName(int id);
// kInvalidArgument for ids outside 1..CriterionCount(). Numerical failures of
// the underlying computation are reported as a failed criterion.
CriterionResult RunCriterion(int id, const Options& opts = {});

}  // namespace beurling::acceptance
