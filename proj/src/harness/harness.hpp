#pragma once

#include <string>
#include <vector>

#include "harness/config.hpp"

namespace beurling::harness {

inline constexpr const char* kVersion = "1.0.0";

struct RunOutcome {
  int exit_code = 0;               // 0 ok, 1 tolerance failure, 2 invalid config
  std::vector<std::string> files;  // paths written
  std::string report;              // human-readable summary
};

// Validates cfg, runs the subcommand and writes its CSV tables plus a JSON
// manifest into the output directory (BEURLING_OUT wins over cfg.output_dir).
// Nothing is written when validation fails.
RunOutcome Run(const std::string& subcommand, const ExperimentConfig& cfg);

// "%.17g"
std::string FormatReal(double v);

}  // namespace beurling::harness
