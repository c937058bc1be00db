#include "cesaro/ergodic.hpp"

#include <algorithm>
#include <random>

namespace cesaro {

PowerBoundedReport power_bounded_check(const WeightFamily& W, int k, int trials, Index m_max, Index N,
                                       std::uint64_t seed, double tolerance) {
  if (N < 1 || m_max < 1) throw DomainError("power_bounded_check requires N, m_max >= 1");
  PowerBoundedReport rep;
  rep.k = k;
  rep.N = W.alpha().finite_horizon(N);
  rep.trials = trials;
  rep.m_max = m_max;
  auto alpha = W.alpha().range(1, rep.N);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  for (int t = 0; t < trials; ++t) {
    std::vector<Complex> x(rep.N);
    for (Index n = 1; n <= rep.N; ++n) {
      Complex u(unif(rng), unif(rng));
      x[n - 1] = (t % 2 == 0) ? u : u * std::exp(-W.log_weight(k, alpha[n - 1]));
    }
    const double log_q0 = log_weighted_norm(x, W, k);
    std::vector<Complex> y = x;
    for (Index m = 1; m <= m_max; ++m) {
      y = cesaro_apply<Complex>(y);
      double ratio = std::exp(log_weighted_norm(y, W, k) - log_q0);
      if (ratio > rep.max_ratio) {
        rep.max_ratio = ratio;
        rep.worst_trial = t;
        rep.worst_m = m;
      }
    }
  }
  rep.passed = rep.max_ratio <= 1.0 + tolerance;
  return rep;
}

IterationTrace iterates_limit_check(std::span<const Complex> x, const WeightFamily& W, int k, double tol,
                                    Index m_cap) {
  if (x.size() < 2) throw DomainError("iterates_limit_check requires N >= 2");
  IterationTrace t;
  t.x.assign(x.begin(), x.end());
  t.k = k;
  t.N = x.size();
  t.limit = decomposition_split<Complex>(x).y;
  std::vector<Complex> y = t.x;
  std::vector<Complex> diff(t.N);
  for (Index m = 1; m <= m_cap; ++m) {
    y = cesaro_apply<Complex>(y);
    for (Index i = 0; i < t.N; ++i) diff[i] = y[i] - t.limit[i];
    double d = weighted_norm(diff, W, k);
    t.m_values.push_back(m);
    t.distances.push_back(d);
    if (d < tol) {
      t.converged = true;
      break;
    }
  }
  t.status = t.converged ? "converged" : "not_converged";
  return t;
}

std::string trace_to_csv(const IterationTrace& t) {
  std::string out = "m,distance\n";
  for (Index i = 0; i < t.m_values.size(); ++i) {
    out += std::to_string(t.m_values[i]) + "," + fmt17(t.distances[i]) + "\n";
  }
  return out;
}

RangeInverse range_inverse_matrices(Index N) {
  if (N < 1) throw DomainError("range_inverse_matrices requires N >= 1");
  RangeInverse r{RationalMatrix(N, "S(I-C)S_r"), RationalMatrix(N, "B"), 0.0, 0.0};
  for (Index n = 1; n <= N; ++n) {
    for (Index m = 1; m <= n; ++m) {
      r.A(n, m) = Rational(n == m ? 1 : 0) - Rational(1, n + 1);
      r.B(n, m) = m == n ? Rational(n + 1, n) : Rational(1, m);
    }
  }
  for (Index n = 1; n <= N; ++n) {
    for (Index m = 1; m <= N; ++m) {
      r.A(n, m).canonicalize();
      r.B(n, m).canonicalize();
    }
  }
  const RationalMatrix I = identity_matrix<Rational>(N);
  r.residual_ab = max_abs_deviation(multiply(r.A, r.B), I);
  r.residual_ba = max_abs_deviation(multiply(r.B, r.A), I);
  return r;
}

GrowthVerdict b_continuity_check(const WeightFamily& W, int k, Index horizon, const DecisionRule& rule) {
  const int l = k + 1;
  Index h_alpha = W.alpha().finite_horizon(horizon + 1);
  if (h_alpha < 3) throw DomainError("b_continuity_check needs at least three α values");
  const Index h = h_alpha - 1;
  auto alpha = W.alpha().range(1, h + 1);
  ScanTracker scan(static_cast<double>(h) / 10.0, Scale::log);
  double log_tail = -kInf;  // log Σ_{m<n} 1/(m v_k(m+1))
  for (Index n = 1; n <= h; ++n) {
    const double dn = static_cast<double>(n);
    const double lvl = W.log_weight(l, alpha[n]);
    const double lvk = W.log_weight(k, alpha[n]);
    double score = std::log1p(1.0 / dn) + lvl - lvk;
    score = log_add_exp(score, lvl + log_tail);
    scan.add(dn, n, score);
    log_tail = log_add_exp(log_tail, -std::log(dn) - lvk);
  }
  GrowthVerdict v = make_verdict(scan, h, rule);
  v.status = boundedness_rule(v, rule);
  TriState declared = W.alpha().flags().nuclear;
  if (declared != TriState::unknown) {
    v.status = declared == TriState::yes ? Status::holds : Status::fails;
    v.declared_override = true;
  }
  return v;
}

}  // namespace cesaro
