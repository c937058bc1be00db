// Command-line front end: classify, verify, grid, probe, ergodic, finite.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cesaro {

inline constexpr const char* kToolVersion = "0.1.0";

/// Exit codes: 0 holds or success, 1 invalid input or a failed check, 2 inconclusive.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cesaro
