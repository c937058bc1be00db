// Lower-triangular operators (𝒞, 𝒞⁻¹, D, Δ, S_r, diagonals), their action on
// finite vectors, weighted norms and continuity evidence between weight steps.
#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cesaro/common.hpp"
#include "cesaro/matrix.hpp"
#include "cesaro/weights.hpp"

namespace cesaro {

/// entry = phase · exp(log_abs); a zero entry has log_abs = -inf.
struct LogEntry {
  double log_abs = -kInf;
  Complex phase = 1.0;
};

enum class Shape { lower_triangular, diagonal, sub_diagonal, super_diagonal };

class TriangularOperator {
 public:
  using EntryFn = std::function<LogEntry(Index, Index)>;

  TriangularOperator(std::string name, Shape shape, EntryFn entry);

  LogEntry log_entry(Index n, Index m) const;
  Complex entry(Index n, Index m) const;

  const std::string& name() const { return name_; }
  Shape shape() const { return shape_; }
  /// False only for D, whose single non-zero diagonal sits above the main one.
  bool lower_triangular() const { return shape_ != Shape::super_diagonal; }

 private:
  std::string name_;
  Shape shape_;
  EntryFn entry_;
};

TriangularOperator identity_operator();
TriangularOperator cesaro_operator();
TriangularOperator cesaro_inverse_operator();
TriangularOperator delta_operator();
TriangularOperator right_shift_operator();
TriangularOperator diff_operator();
TriangularOperator diagonal_operator(std::string name, std::function<Complex(Index)> d);

/// Largest truncation for which Δ fits a dense double matrix.
inline constexpr Index kDeltaDenseLimit = 1020;

/// Dense truncation; Δ beyond kDeltaDenseLimit raises OverflowError.
TruncatedMatrix<Complex> truncate(const TriangularOperator& op, Index N);

/// Row-major CSV, one matrix row per line, each entry written as "re,im".
std::string to_csv(const TruncatedMatrix<Complex>& a);

/// Signed binomial of Δ in log form: log C(n-1, m-1) and (-1)^{m-1}.
LogEntry delta_log_entry(Index n, Index m);

template <class S>
std::vector<S> cesaro_apply(std::span<const S> x) {
  std::vector<S> y(x.size());
  S partial = S(0);
  for (Index n = 1; n <= x.size(); ++n) {
    partial += x[n - 1];
    y[n - 1] = partial / S(n);
  }
  return y;
}

template <class S>
std::vector<S> cesaro_inverse_apply(std::span<const S> y) {
  std::vector<S> x(y.size());
  for (Index n = 1; n <= y.size(); ++n) {
    S cur = S(n) * y[n - 1];
    if (n >= 2) cur -= S(n - 1) * y[n - 2];
    x[n - 1] = cur;
  }
  return x;
}

/// D(x) = (x₂, 2x₃, 3x₄, ...); the output has one coordinate fewer.
template <class S>
std::vector<S> diff_apply(std::span<const S> x) {
  std::vector<S> y;
  for (Index n = 1; n < x.size(); ++n) y.push_back(S(n) * x[n]);
  return y;
}

/// S_r x = (0, x₁, x₂, ...); the output has one coordinate more.
template <class S>
std::vector<S> shift_apply(std::span<const S> x) {
  std::vector<S> y(x.size() + 1, S(0));
  for (Index n = 0; n < x.size(); ++n) y[n + 1] = x[n];
  return y;
}

template <class S>
std::vector<S> diag_apply(std::span<const S> d, std::span<const S> x) {
  if (d.size() < x.size()) throw DomainError("diagonal shorter than vector");
  std::vector<S> y(x.size());
  for (Index n = 0; n < x.size(); ++n) y[n] = d[n] * x[n];
  return y;
}

/// Δx in double precision; lengths above kDeltaDenseLimit raise OverflowError.
std::vector<Complex> delta_apply(std::span<const Complex> x);

/// q_k(x) = max_n v_k(n)|x_n|, evaluated as a log-domain maximum.
double weighted_norm(std::span<const Complex> x, const WeightFamily& W, int k);
double log_weighted_norm(std::span<const Complex> x, const WeightFamily& W, int k);

/// Entry (n,m) multiplied by v_l(n)/v_k(m).
TriangularOperator conjugate_to_c0(const TriangularOperator& A, const WeightFamily& W, int k, int l);

struct C0ContinuityVerdict {
  double row_sup = 0.0;
  double log_row_sup = -kInf;
  Index row_witness = 0;
  bool rows_bounded = false;
  bool column_decay = false;
  bool continuous_evidence = false;
};

struct C0Options {
  double column_tolerance = 1e-6;
  DecisionRule rule;
};

C0ContinuityVerdict c0_continuity_test(const TriangularOperator& A, Index N, Index M,
                                       const C0Options& opts = {});

std::vector<std::string> step_operator_names();

/// Operator-specific row-sum criterion for op: c₀(v_k) → c₀(v_l).
GrowthVerdict step_continuity_test(std::string_view op, const WeightFamily& W, int k, int l, Index horizon,
                                   const DecisionRule& rule = {});

/// Smallest l in [k, l_max] where step_continuity_test holds.
std::optional<int> find_continuity_step(std::string_view op, const WeightFamily& W, int k, Index horizon,
                                        int l_max = 64, const DecisionRule& rule = {});

}  // namespace cesaro
