#pragma once

#include <string>
#include <vector>

#include "asymptotica/harness/config.hpp"
#include "json.hpp"

namespace asymptotica::harness {

struct RunOutcome {
  bool pass = false;
  /// {operation, inputs, table, slope, verdict, ...}
  nlohmann::json summary;
  std::string csv;
  std::vector<std::string> files;
};

/// Runs the configured experiment without touching the file system.
RunOutcome computeExperiment(const ExperimentConfig& config);

/// Runs and writes `<out>/<experiment>.json`, `<out>/<experiment>.csv` and any
/// experiment-specific files. Throws ConfigError for an unwritable output directory.
RunOutcome runExperiment(const ExperimentConfig& config);

enum ExitCode { kExitPass = 0, kExitVerdict = 1, kExitConfig = 2, kExitNumeric = 3 };

}  // namespace asymptotica::harness
