#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "core/finite_field.hpp"
#include "core/report.hpp"
#include "harness/config.hpp"

namespace charsum::harness {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitField = 3;
inline constexpr int kExitIo = 4;
inline constexpr int kExitInternal = 5;

/// Exit code for an error raised outside field construction.
int exit_code_for(ErrorCode code);

/// Worker count: CHARSUM_THREADS if set, else config.threads, else hardware concurrency.
unsigned resolve_threads(const RunConfig& config);

struct RunResult {
  int exit_code = kExitOk;
  std::string error;  // set when the run stopped before finishing its checks
  std::vector<VerificationReport> reports;
  double wall_seconds = 0.0;

  std::size_t total_checks() const;
  std::size_t failed_checks() const;
  double max_deviation() const;
};

/// Validates the config, builds every field, runs the selected suites in
/// parallel and writes the JSON/CSV reports when paths are configured.
/// Report order depends only on the config, never on scheduling.
RunResult run(const RunConfig& config);

}  // namespace charsum::harness
