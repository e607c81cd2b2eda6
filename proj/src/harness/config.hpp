#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace beurling::harness {

struct ExperimentConfig {
  double beta = 0.5;
  int K = 3;
  double x_max = 1e6;
  std::string scheme = "median";
  std::uint64_t seed = 1;
  int threads = 1;
  std::string mode = "full";       // full | truncated
  std::string output_dir = "out";
  std::map<std::string, double> tolerances;

  // per-subcommand extras
  int n_max = 50;
  double center = 32.0;
  double half_width = 0.2;
  double x = 50.0;
  double kappa = 1.25;
  double T = 1e5;
  int perron_K = 1;
};

// Tolerance defaults; `tol.<name>` keys override them.
double Tolerance(const ExperimentConfig& cfg, const std::string& name);

// key=value lines; '#' and ';' start comments, [section] headers are ignored.
ExperimentConfig LoadConfigFile(const std::string& path, ExperimentConfig base = {});
// kInvalidArgument for unknown keys or unparsable values.
void SetOption(ExperimentConfig& cfg, const std::string& key, const std::string& value);

// kInvalidArgument when a field violates a module precondition.
void Validate(const ExperimentConfig& cfg, const std::string& subcommand);

// Canonical text of every field that affects results (threads and output_dir
// excluded) and its FNV-1a hash.
std::string Canonical(const ExperimentConfig& cfg);
std::uint64_t ConfigHash(const ExperimentConfig& cfg, const std::string& subcommand);

}  // namespace beurling::harness
