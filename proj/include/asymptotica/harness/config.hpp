#pragma once

#include <map>
#include <string>
#include <vector>

#include "asymptotica/distribution/test_function.hpp"

namespace asymptotica::harness {

/// Flat key = value settings. Later sources override earlier ones: defaults, then a file,
/// then command-line overrides.
class ExperimentConfig {
 public:
  ExperimentConfig();

  static ExperimentConfig fromText(const std::string& text);
  static ExperimentConfig fromFile(const std::string& path);

  /// Unknown keys are a ConfigError.
  void set(const std::string& key, const std::string& value);
  bool has(const std::string& key) const { return values_.count(key) > 0; }

  std::string text(const std::string& key) const;
  int integer(const std::string& key) const;
  double real(const std::string& key) const;
  std::vector<double> reals(const std::string& key) const;

  std::string experiment() const { return text("experiment"); }

  /// Strictly decreasing, start * 10^(-i / perDecade) down to stop.
  std::vector<double> epsGrid() const;

  /// The configured panel, or `fallback` for `default`.
  std::vector<distribution::TestFunction> panel(const std::vector<distribution::TestFunction>& fallback) const;

  /// Checks everything the selected experiment reads.
  void validate() const;

  const std::map<std::string, std::string>& values() const { return values_; }
  static const std::vector<std::string>& experiments();

 private:
  std::map<std::string, std::string> values_;
};

/// `bump:radius:center[:p0,p1,...]` entries separated by ';'.
std::vector<distribution::TestFunction> parsePanel(const std::string& spec);

}  // namespace asymptotica::harness
