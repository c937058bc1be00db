#include "cesaro/finite_type.hpp"

#include <algorithm>

namespace cesaro {

FiniteTypeWeights finite_log_np1() {
  return {AlphaSequence::from_function("log_np1", [](Index n) { return std::log(static_cast<double>(n) + 1.0); }),
          false, 0};
}

FiniteTypeWeights finite_staircase(int max_block) {
  if (max_block < 1 || max_block > kMaxStaircaseBlock) {
    throw OverflowError("staircase block index out of range [1, 170]");
  }
  return {make_alpha("staircase"), true, max_block};
}

FiniteTypeWeights finite_from_alpha(AlphaSequence alpha) { return {std::move(alpha), false, 0}; }

namespace {

void check_steps(int k, int l) {
  if (k < 1 || l < k) throw DomainError("finite-type criterion requires 1 <= k <= l");
}

std::vector<double> alpha_values(const FiniteTypeWeights& W, Index h) {
  std::vector<double> a;
  a.reserve(h);
  for (const AlphaValue& v : W.alpha.range(1, h)) a.push_back(v.value);
  return a;
}

// log Σ_{m≤n} e^{-α_m/k}, n = 1..h.
std::vector<double> log_prefix(const std::vector<double>& alpha, int k) {
  std::vector<double> lp(alpha.size());
  double acc = -kInf;
  for (Index i = 0; i < alpha.size(); ++i) {
    acc = log_add_exp(acc, -alpha[i] / k);
    lp[i] = acc;
  }
  return lp;
}

double log1m_exp(double x) { return std::log1p(-std::exp(x)); }

// Block-level data of the staircase: block K covers j(K) ≤ n < j(K+1) with
// α_n = log(β_K + γ_n), β_K = K j(K)^K, γ_n = 3 - 1/(n+1).
struct Block {
  double log_start;  // log j(K)
  double log_end;    // log(j(K+1) - 1)
  double alpha_start;
  double alpha_end;
  double log_count;
  bool small;  // j(K+1) ≤ 1000: summed term by term
  Index start = 0, stop = 0;
};

std::vector<Block> staircase_blocks(int max_block) {
  std::vector<Block> out;
  std::vector<double> lj(max_block + 2);
  for (int K = 1; K <= max_block + 1; ++K) lj[K] = staircase_log_j(K);
  for (int K = 1; K <= max_block; ++K) {
    Block b{};
    b.log_start = lj[K];
    b.log_end = lj[K + 1] + log1m_exp(-lj[K + 1]);
    const double log_beta = std::log(static_cast<double>(K)) + K * lj[K];
    const double gamma_start = lj[K] < 40.0 ? 3.0 - 1.0 / (std::exp(lj[K]) + 1.0) : 3.0;
    b.alpha_start = log_beta + std::log1p(gamma_start * std::exp(-log_beta));
    b.alpha_end = log_beta + std::log1p(3.0 * std::exp(-log_beta));
    b.log_count = lj[K + 1] + log1m_exp(lj[K] - lj[K + 1]);
    b.small = lj[K + 1] <= std::log(1000.0);
    if (b.small) {
      b.start = static_cast<Index>(std::llround(std::exp(lj[K])));
      b.stop = static_cast<Index>(std::llround(std::exp(lj[K + 1])));
    }
    out.push_back(b);
  }
  return out;
}

// Per-k block sums of e^{-α_m/k}, cumulative through each block.
std::vector<double> staircase_block_prefix(const std::vector<Block>& blocks, const AlphaSequence& alpha, int k) {
  std::vector<double> cum;
  double acc = -kInf;
  for (const Block& b : blocks) {
    if (b.small) {
      for (Index m = b.start; m < b.stop; ++m) acc = log_add_exp(acc, -alpha.value(m) / k);
    } else {
      // γ_m ≈ 3 across the block; the relative error is below 1/β_K.
      acc = log_add_exp(acc, b.log_count - b.alpha_end / k);
    }
    cum.push_back(acc);
  }
  return cum;
}

struct Cache {
  std::vector<double> alpha;
  std::vector<double> prefix;
  std::vector<Block> blocks;
  std::vector<double> block_prefix;
};

FtVerdict evaluate(const FiniteTypeWeights& W, const Cache& c, int k, int l, Index h, const DecisionRule& rule) {
  const double dl = static_cast<double>(l);
  FtVerdict out;
  if (!W.staircase) {
    ScanTracker scan(static_cast<double>(h) / 10.0, Scale::log);
    for (Index n = 1; n <= h; ++n) {
      const double dn = static_cast<double>(n);
      scan.add(dn, n, c.alpha[n - 1] / dl - std::log(dn) + c.prefix[n - 1]);
    }
    out.verdict = make_verdict(scan, h, rule);
    out.log_witness_n = std::log(static_cast<double>(out.verdict.witness_index));
  } else {
    // Positions are block indices: the dense prefix sits at 0 and the last
    // decade is the last tenth of the evaluated blocks.
    const double log_h = std::log(static_cast<double>(h));
    const double blocks = static_cast<double>(c.blocks.size());
    ScanTracker scan(0.9 * blocks, Scale::log);
    for (Index n = 1; n <= h; ++n) {
      const double ln = std::log(static_cast<double>(n));
      scan.add(0.0, n, c.alpha[n - 1] / dl - ln + c.prefix[n - 1]);
    }
    double best = scan.sup_score();
    double best_log_n = std::log(static_cast<double>(std::max<Index>(scan.witness(), 1)));
    auto add_block_point = [&](double K, double ln, double score) {
      if (ln <= log_h) return;
      scan.add(K, 0, score);
      if (score > best) {
        best = score;
        best_log_n = ln;
      }
    };
    for (Index K = 0; K < c.blocks.size(); ++K) {
      const Block& b = c.blocks[K];
      const double before = K == 0 ? -kInf : c.block_prefix[K - 1];
      const double pos = static_cast<double>(K + 1);
      add_block_point(pos, b.log_start, b.alpha_start / dl - b.log_start + log_add_exp(before, -b.alpha_start / k));
      add_block_point(pos, b.log_end, b.alpha_end / dl - b.log_end + c.block_prefix[K]);
    }
    out.verdict = make_verdict(scan, h, rule);
    out.log_witness_n = best_log_n;
  }
  out.verdict.status = boundedness_rule(out.verdict, rule);
  return out;
}

Cache build_cache(const FiniteTypeWeights& W, int k, Index h) {
  Cache c;
  c.alpha = alpha_values(W, h);
  c.prefix = log_prefix(c.alpha, k);
  if (W.staircase) {
    if (W.max_block < 1 || W.max_block > kMaxStaircaseBlock) {
      throw OverflowError("staircase block index out of range [1, 170]");
    }
    c.blocks = staircase_blocks(W.max_block);
    c.block_prefix = staircase_block_prefix(c.blocks, W.alpha, k);
  }
  return c;
}

Index dense_horizon(const FiniteTypeWeights& W, Index horizon) {
  Index h = W.alpha.finite_horizon(W.staircase ? std::min(horizon, kDenseFiniteLimit) : horizon);
  if (h < 2) throw DomainError("finite-type criterion needs a horizon of at least 2");
  return h;
}

}  // namespace

std::vector<double> ft_criterion_log_values(const FiniteTypeWeights& W, int k, int l, Index horizon) {
  check_steps(k, l);
  Index h = W.alpha.finite_horizon(horizon);
  auto alpha = alpha_values(W, h);
  auto lp = log_prefix(alpha, k);
  std::vector<double> out(h);
  for (Index n = 1; n <= h; ++n) {
    out[n - 1] = alpha[n - 1] / l - std::log(static_cast<double>(n)) + lp[n - 1];
  }
  return out;
}

FtVerdict ft_continuity_criterion(const FiniteTypeWeights& W, int k, int l, Index horizon,
                                  const DecisionRule& rule) {
  check_steps(k, l);
  Index h = dense_horizon(W, horizon);
  return evaluate(W, build_cache(W, k, h), k, l, h, rule);
}

FtActsReport ft_cesaro_acts(const FiniteTypeWeights& W, Index horizon, int l_max, int k_probe,
                            const DecisionRule& rule) {
  if (k_probe < 1 || l_max < 2) throw DomainError("ft_cesaro_acts requires k_probe >= 1 and l_max >= 2");
  FtActsReport rep;
  rep.horizon = dense_horizon(W, horizon);
  rep.l_max = l_max;
  bool all_found = true;
  bool any_failed = false;
  for (int k = 1; k <= k_probe; ++k) {
    FtStepResult step;
    step.k = k;
    if (k >= l_max) {
      all_found = false;
      rep.steps.push_back(step);
      continue;
    }
    Cache cache = build_cache(W, k, rep.horizon);
    step.all_failed = true;
    for (int l = k + 1; l <= l_max; ++l) {
      step.last = evaluate(W, cache, k, l, rep.horizon, rule);
      if (step.last.verdict.status != Status::fails) step.all_failed = false;
      if (step.last.verdict.status == Status::holds) {
        step.l_found = l;
        break;
      }
    }
    all_found = all_found && step.l_found.has_value();
    any_failed = any_failed || step.all_failed;
    rep.steps.push_back(step);
  }
  rep.status = all_found ? Status::holds : any_failed ? Status::fails : Status::inconclusive;
  return rep;
}

mpz_class staircase_j(int k) {
  if (k < 1) throw DomainError("staircase index must be >= 1");
  if (k > 8) throw OverflowError("exact staircase values are limited to k <= 8");
  mpz_class j = 1;
  for (int i = 1; i < k; ++i) {
    mpz_class p;
    mpz_pow_ui(p.get_mpz_t(), j.get_mpz_t(), static_cast<unsigned long>(i));
    j = 2 * (i + 1) * p;
  }
  return j;
}

double staircase_log_j(int k) {
  if (k < 1) throw DomainError("staircase index must be >= 1");
  if (k > kMaxStaircaseBlock + 1) throw OverflowError("log j(k) overflows double for k > 171");
  double lj = 0.0;
  for (int i = 1; i < k; ++i) lj = std::log(2.0 * (i + 1)) + i * lj;
  return lj;
}

double staircase_log_lower_bound(int k, int l) {
  if (k < 1 || l < 1) throw DomainError("staircase bound requires k, l >= 1");
  const double dk = static_cast<double>(k), dl = static_cast<double>(l);
  return (1.0 / dl + dk / dl - 1.0) * std::log(dk) - std::log(4.0);
}

double staircase_lower_bound(int k, int l) { return std::exp(staircase_log_lower_bound(k, l)); }

int staircase_divergence_index(int l, double T) {
  if (l < 1) throw DomainError("staircase bound requires l >= 1");
  const double log_T = std::log(T);
  // The bound increases in k once k ≥ l - 1.
  int k = std::max(1, l - 1);
  while (staircase_log_lower_bound(k, l) <= log_T) ++k;
  while (k > 1 && staircase_log_lower_bound(k - 1, l) > log_T) --k;
  return k;
}

namespace {

template <class LogRatio>
GrowthVerdict partial_sum_verdict(LogRatio log_ratio, Index h, const GpOptions& opts) {
  const Index split = std::max<Index>(1, h / 10);
  double acc = -kInf, early = -kInf;
  for (Index n = 1; n <= h; ++n) {
    acc = log_add_exp(acc, log_ratio(n));
    if (n == split) early = acc;
  }
  GrowthVerdict v;
  v.horizon = h;
  v.log_sup_value = acc;
  v.sup_value = std::exp(acc);
  v.witness_index = h;
  const double gain = acc == -kInf ? 0.0 : -std::expm1(early - acc);
  v.grew_last_decade = gain > opts.convergence_tolerance;
  v.status = gain <= opts.convergence_tolerance ? Status::holds
             : gain >= opts.divergence_fraction  ? Status::fails
                                                 : Status::inconclusive;
  return v;
}

}  // namespace

GrowthVerdict gp_nuclearity(const FiniteTypeWeights& W, int k, int l, Index horizon, const GpOptions& opts) {
  if (k < 1 || l <= k) throw DomainError("gp_nuclearity requires l > k >= 1");
  Index h = W.alpha.finite_horizon(horizon);
  auto alpha = alpha_values(W, h);
  const double c = 1.0 / l - 1.0 / k;
  return partial_sum_verdict([&](Index n) { return c * alpha[n - 1]; }, h, opts);
}

GrowthVerdict gp_nuclearity(const WeightFamily& W, int k, int l, Index horizon, const GpOptions& opts) {
  if (k < 1 || l <= k) throw DomainError("gp_nuclearity requires l > k >= 1");
  Index h = W.alpha().finite_horizon(horizon);
  auto alpha = W.alpha().range(1, h);
  return partial_sum_verdict(
      [&](Index n) { return W.log_weight(l, alpha[n - 1]) - W.log_weight(k, alpha[n - 1]); }, h, opts);
}

}  // namespace cesaro
