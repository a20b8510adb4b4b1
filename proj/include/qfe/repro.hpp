#pragma once

// Named reproduction checks, shared by `qfe repro` and the test suite.

#include <string>
#include <string_view>
#include <vector>

namespace qfe {

struct ReproResult {
  std::string name;
  bool pass = false;
  /// Human-readable output.
  std::vector<std::string> lines;
  /// `- expected` / `+ got` lines for whatever did not match.
  std::vector<std::string> diff;
};

struct ReproArtifact {
  std::string name;
  std::string description;
  ReproResult (*run)();
};

const std::vector<ReproArtifact>& repro_artifacts();

/// Throws std::invalid_argument for unknown names.
ReproResult run_repro(std::string_view name);

/// Line-by-line comparison; appends to diff and returns true on equality.
bool compare_lines(const std::vector<std::string>& expected, const std::vector<std::string>& got,
                   std::vector<std::string>& diff);

}  // namespace qfe
