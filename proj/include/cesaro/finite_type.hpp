// Duals of finite-type power series spaces with v_k(n) = e^{α_n/k}: the
// continuity criterion for 𝒞, the staircase weights on which 𝒞 fails to act,
// and the Grothendieck-Pietsch nuclearity test.
#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "cesaro/weights.hpp"

namespace cesaro {

/// Increasing weights v_k(n) = e^{α_n/k}, stored as α.
struct FiniteTypeWeights {
  AlphaSequence alpha;
  // Staircase weights are also evaluated block by block far past 64-bit indices.
  bool staircase = false;
  int max_block = 80;

  double log_weight(int k, Index n) const { return alpha.value(n) / static_cast<double>(k); }
};

FiniteTypeWeights finite_log_np1();
FiniteTypeWeights finite_staircase(int max_block = 80);
FiniteTypeWeights finite_from_alpha(AlphaSequence alpha);

inline constexpr Index kDenseFiniteLimit = 1000000;
inline constexpr int kMaxStaircaseBlock = 170;

struct FtVerdict {
  GrowthVerdict verdict;
  double log_witness_n = 0.0;  // log of the witness index, valid past 64 bits
};

/// log[(v_l(n)/n) Σ_{m≤n} 1/v_k(m)] for n = 1..horizon.
std::vector<double> ft_criterion_log_values(const FiniteTypeWeights& W, int k, int l, Index horizon);

/// sup_n (v_l(n)/n) Σ_{m≤n} 1/v_k(m), judged by the boundedness rule. Staircase
/// weights are scanned densely up to min(horizon, 10⁶) and then at the start
/// and end of every block up to max_block; their last decade is the last tenth
/// of the blocks.
FtVerdict ft_continuity_criterion(const FiniteTypeWeights& W, int k, int l, Index horizon,
                                  const DecisionRule& rule = {});

struct FtStepResult {
  int k = 1;
  std::optional<int> l_found;
  bool all_failed = false;
  FtVerdict last;
};

struct FtActsReport {
  Status status = Status::inconclusive;  // holds: acts, fails: does not act
  Index horizon = 0;
  int l_max = 0;
  std::vector<FtStepResult> steps;
};

FtActsReport ft_cesaro_acts(const FiniteTypeWeights& W, Index horizon, int l_max = 64, int k_probe = 4,
                            const DecisionRule& rule = {});

/// j(1) = 1, j(k+1) = 2(k+1) j(k)^k.
mpz_class staircase_j(int k);
double staircase_log_j(int k);

/// k^{1/l} k^{k/l-1} / 4 and its logarithm.
double staircase_lower_bound(int k, int l);
double staircase_log_lower_bound(int k, int l);

/// Smallest k₀ with staircase_lower_bound(k, l) > T for every k ≥ k₀.
int staircase_divergence_index(int l, double T);

struct GpOptions {
  double convergence_tolerance = 1e-6;  // relative gain over the last decade
  double divergence_fraction = 0.1;
};

/// Partial sums of v_l(n)/v_k(n): holds when the last decade adds a relative
/// amount below the tolerance, fails when it adds at least divergence_fraction.
GrowthVerdict gp_nuclearity(const FiniteTypeWeights& W, int k, int l, Index horizon, const GpOptions& opts = {});
GrowthVerdict gp_nuclearity(const WeightFamily& W, int k, int l, Index horizon, const GpOptions& opts = {});

}  // namespace cesaro
