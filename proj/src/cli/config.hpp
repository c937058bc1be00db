#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cesaro/finite_type.hpp"
#include "cesaro/weights.hpp"

namespace cesaro::cli {

/// Materialized options of one run, in a fixed order.
struct RunConfig {
  std::string command;
  std::vector<std::pair<std::string, std::string>> entries;

  void set(std::string key, std::string value);
  /// key=value lines; output paths and the thread count do not affect results and are left out.
  std::string canonical() const;
  std::uint64_t hash() const;
  std::string hash_hex() const;
};

std::uint64_t fnv1a64(std::string_view bytes);

/// preset:NAME or file:PATH.
AlphaSequence parse_alpha_spec(const std::string& spec);
/// finite:log_np1, finite:staircase, preset:NAME or file:PATH.
FiniteTypeWeights parse_finite_spec(const std::string& spec, int max_block);
/// "a:b" with a ≤ b.
std::pair<double, double> parse_range(const std::string& text);
/// "re,im".
Complex parse_complex(const std::string& text);
/// e1, ones, e:R or a comma-separated list of reals.
std::vector<Complex> parse_vector_spec(const std::string& text, Index N);

}  // namespace cesaro::cli
