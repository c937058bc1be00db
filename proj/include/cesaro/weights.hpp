// α-sequences, the weight families v_k(n) = s_k^{-α_n} and the growth
// predicates evaluated on them.
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cesaro/common.hpp"

namespace cesaro {

/// α_n together with log α_n. `value` may be +inf when only the log fits.
struct AlphaValue {
  double value;
  double log_value;
};

struct DeclaredFlags {
  TriState nuclear = TriState::unknown;
  TriState shift_stable = TriState::unknown;
  TriState delta_continuous = TriState::unknown;
  TriState loglog_finite = TriState::unknown;
};

class AlphaSequence {
 public:
  using Generator = std::function<AlphaValue(Index)>;
  // α_{n+1} − α_n, for sequences whose increments fall below double resolution.
  using Increment = std::function<double(Index)>;

  AlphaSequence(std::string name, Generator generator, DeclaredFlags flags = {},
                std::optional<Index> length = std::nullopt, Increment increment = nullptr);

  /// Wraps a plain α generator; the first 16 values are validated eagerly.
  static AlphaSequence from_function(std::string name, std::function<double(Index)> alpha,
                                     DeclaredFlags flags = {});
  static AlphaSequence from_values(std::string name, std::vector<double> values);
  /// Reads "n,alpha_n" rows, n = 1, 2, ... consecutive. Lines starting with '#'
  /// and a non-numeric header row are skipped.
  static AlphaSequence from_csv(const std::string& path);

  AlphaValue at(Index n) const;
  double value(Index n) const { return at(n).value; }
  double log_value(Index n) const { return at(n).log_value; }

  /// Validated values for n = first..last.
  std::vector<AlphaValue> range(Index first, Index last) const;

  /// Largest n ≤ requested with finite α_n (and within the data length).
  Index finite_horizon(Index requested) const;

  const std::string& name() const { return name_; }
  const DeclaredFlags& flags() const { return flags_; }
  std::optional<Index> length() const { return length_; }

 private:
  AlphaValue raw(Index n) const;
  void check_step(Index n, const AlphaValue& prev, const AlphaValue& cur) const;

  std::string name_;
  Generator generator_;
  DeclaredFlags flags_;
  std::optional<Index> length_;
  Increment increment_;
};

AlphaSequence make_alpha(std::string_view preset);
std::vector<std::string> alpha_preset_names();

/// The base sequence (s_k), stored as log s_k.
class BaseSequence {
 public:
  static BaseSequence exponential();     // s_k = e^k
  static BaseSequence shifted_linear();  // s_k = k + 1
  static BaseSequence custom(std::string name, std::function<double(int)> s);
  static BaseSequence from_name(std::string_view name);

  double log_s(int k) const;
  const std::string& name() const { return name_; }

 private:
  BaseSequence(std::string name, std::function<double(int)> log_s);
  std::string name_;
  std::function<double(int)> log_s_;
};

class WeightFamily {
 public:
  explicit WeightFamily(AlphaSequence alpha, BaseSequence base = BaseSequence::exponential());

  double log_weight(int k, Index n) const { return log_weight(k, alpha_.at(n)); }
  double log_weight(int k, const AlphaValue& a) const;
  double weight(int k, Index n) const { return std::exp(log_weight(k, n)); }

  const AlphaSequence& alpha() const { return alpha_; }
  const BaseSequence& base() const { return base_; }

 private:
  AlphaSequence alpha_;
  BaseSequence base_;
};

GrowthVerdict check_nuclear(const AlphaSequence& alpha, Index horizon, const DecisionRule& rule = {});
GrowthVerdict check_shift_stable(const AlphaSequence& alpha, Index horizon, const DecisionRule& rule = {});
GrowthVerdict check_delta_continuity(const AlphaSequence& alpha, Index horizon,
                                     const DecisionRule& rule = {});
GrowthVerdict check_loglog_bounded(const AlphaSequence& alpha, Index horizon,
                                   const DecisionRule& rule = {});

struct DominationOptions {
  int m_max = 64;
  double log_bound = std::log(1e12);
};

struct DominationResult {
  std::optional<int> M;
  GrowthVerdict verdict;
};

/// Smallest M with sup_n n^γ e^{-M α_n} bounded at the horizon.
DominationResult check_polynomial_domination(const AlphaSequence& alpha, double gamma, Index horizon,
                                             const DominationOptions& opts = {},
                                             const DecisionRule& rule = {});

}  // namespace cesaro
