#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace charsum {

/// abs_tol(q, n) = max(floor, scale * n * sqrt(q)).
struct TolerancePolicy {
  double floor = 1e-6;
  double scale = 1e-12;

  double abs_tol(std::uint64_t q, std::uint64_t n_terms) const {
    return std::max(floor, scale * static_cast<double>(n_terms) * std::sqrt(static_cast<double>(q)));
  }
};

struct CheckRecord {
  std::string check_id;
  std::string inputs;
  double deviation = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerificationReport {
  std::string suite;
  std::uint64_t q = 0;
  std::optional<std::uint64_t> a_index;
  unsigned octic = 1;
  std::vector<CheckRecord> checks;
  double max_deviation = 0.0;
  double wall_seconds = 0.0;

  void add(std::string check_id, std::string inputs, double deviation, double tolerance) {
    // NaN deviations must fail.
    const bool ok = deviation <= tolerance;
    checks.push_back({std::move(check_id), std::move(inputs), deviation, tolerance, ok});
    if (!(deviation <= max_deviation)) max_deviation = deviation;
  }

  void merge(const VerificationReport& other) {
    for (const auto& c : other.checks) add(c.check_id, c.inputs, c.deviation, c.tolerance);
  }

  std::size_t failures() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const CheckRecord& c) { return !c.pass; }));
  }
  bool passed() const { return failures() == 0; }

  /// Deterministic order: by check id, then inputs.
  void sort_checks() {
    std::stable_sort(checks.begin(), checks.end(), [](const CheckRecord& x, const CheckRecord& y) {
      return std::tie(x.check_id, x.inputs) < std::tie(y.check_id, y.inputs);
    });
  }
};

}  // namespace charsum
