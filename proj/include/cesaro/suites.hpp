// Verification suites: named pass/fail checks over the algebraic identities,
// resolvent bounds, ergodic behaviour and finite-type criteria.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cesaro/common.hpp"

namespace cesaro {

struct CheckResult {
  std::string label;  // "<suite>/<check>"
  bool passed = false;
  double value = 0.0;  // the measured quantity (deviation, margin, sup, ...)
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  double seconds = 0.0;

  bool passed() const;
};

/// Unset fields take per-suite defaults.
struct SuiteOptions {
  std::optional<Index> N;
  std::optional<Index> m;
  std::optional<int> samples;
  std::optional<Index> horizon;
  std::uint64_t seed = 1;
  unsigned threads = 1;
};

std::vector<std::string> suite_names();

/// Throws DomainError on an unknown suite name.
SuiteReport run_suite(std::string_view name, const SuiteOptions& opts = {});

}  // namespace cesaro
