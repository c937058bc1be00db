// Powers and Cesàro means of 𝒞, power boundedness, convergence of the iterates
// to the projection onto span{𝟏}, and the closed-range inverse matrix B.
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cesaro/exact.hpp"
#include "cesaro/operators.hpp"
#include "cesaro/weights.hpp"

namespace cesaro {

/// 𝒞^m x at truncation x.size(). Lower triangularity makes the truncation exact.
template <class S>
std::vector<S> power_apply(std::span<const S> x, Index m) {
  if (m < 1) throw DomainError("power_apply requires m >= 1");
  std::vector<S> y(x.begin(), x.end());
  for (Index i = 0; i < m; ++i) y = cesaro_apply<S>(y);
  return y;
}

/// T_[n] x = (1/n) Σ_{m=1}^{n} 𝒞^m x, summed in order m = 1..n.
template <class S>
std::vector<S> cesaro_means(std::span<const S> x, Index n) {
  if (n < 1) throw DomainError("cesaro_means requires n >= 1");
  std::vector<S> y(x.begin(), x.end());
  std::vector<S> acc(x.size(), S(0));
  for (Index m = 1; m <= n; ++m) {
    y = cesaro_apply<S>(y);
    for (Index i = 0; i < y.size(); ++i) acc[i] += y[i];
  }
  for (auto& a : acc) a /= S(n);
  return acc;
}

template <class S>
struct Split {
  std::vector<S> y;  // x₁·𝟏
  std::vector<S> z;  // x - y, first coordinate zero
};

template <class S>
Split<S> decomposition_split(std::span<const S> x) {
  Split<S> s;
  S first = x.empty() ? S(0) : x[0];
  s.y.assign(x.size(), first);
  s.z.resize(x.size());
  for (Index i = 0; i < x.size(); ++i) s.z[i] = x[i] - s.y[i];
  return s;
}

struct PowerBoundedReport {
  int k = 1;
  Index N = 0;
  int trials = 0;
  Index m_max = 0;
  bool passed = true;
  double max_ratio = 0.0;  // max q_k(𝒞^m x)/q_k(x)
  int worst_trial = -1;
  Index worst_m = 0;
};

/// Random x: even trials uniform in [-1,1]², odd trials scaled by 1/v_k(n).
PowerBoundedReport power_bounded_check(const WeightFamily& W, int k, int trials, Index m_max, Index N,
                                       std::uint64_t seed = 1, double tolerance = 1e-10);

struct IterationTrace {
  std::vector<Index> m_values;
  std::vector<double> distances;  // q_k(𝒞^m x - P x)
  std::vector<Complex> x;
  std::vector<Complex> limit;  // P x = x₁·𝟏
  int k = 1;
  Index N = 0;
  bool converged = false;
  std::string status;  // converged | not_converged
};

IterationTrace iterates_limit_check(std::span<const Complex> x, const WeightFamily& W, int k,
                                    double tol = 1e-8, Index m_cap = 10000);

std::string trace_to_csv(const IterationTrace& t);

struct RangeInverse {
  RationalMatrix A;  // a_nm = δ_nm - 1/(n+1), m ≤ n
  RationalMatrix B;  // b_nn = (n+1)/n, b_nm = 1/m for m < n
  double residual_ab = 0.0;
  double residual_ba = 0.0;
};

/// A is the truncation of S(I - 𝒞)S_r, the restriction of I - 𝒞 to {x₁ = 0}.
RangeInverse range_inverse_matrices(Index N);

/// sup_n Σ_m ṽ_l(n)/ṽ_k(m)|b_nm| with ṽ_r(n) = v_r(n+1) and l = k+1.
GrowthVerdict b_continuity_check(const WeightFamily& W, int k, Index horizon, const DecisionRule& rule = {});

}  // namespace cesaro
