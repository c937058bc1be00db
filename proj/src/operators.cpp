#include "cesaro/operators.hpp"

#include <cstdint>

namespace cesaro {

namespace {

constexpr Index kPascalRows = 67;  // C(66, 33) still fits in 64 bits

const std::vector<std::vector<std::uint64_t>>& pascal() {
  static const auto table = [] {
    std::vector<std::vector<std::uint64_t>> t(kPascalRows);
    for (Index r = 0; r < kPascalRows; ++r) {
      t[r].assign(r + 1, 1);
      for (Index c = 1; c < r; ++c) t[r][c] = t[r - 1][c - 1] + t[r - 1][c];
    }
    return t;
  }();
  return table;
}

double log_binomial(Index n, Index k) {
  if (n < kPascalRows) return std::log(static_cast<double>(pascal()[n][k]));
  return std::lgamma(static_cast<double>(n) + 1.0) - std::lgamma(static_cast<double>(k) + 1.0) -
         std::lgamma(static_cast<double>(n - k) + 1.0);
}

LogEntry real_entry(double log_abs, bool negative = false) {
  return {log_abs, negative ? Complex(-1.0) : Complex(1.0)};
}

}  // namespace

TriangularOperator::TriangularOperator(std::string name, Shape shape, EntryFn entry)
    : name_(std::move(name)), shape_(shape), entry_(std::move(entry)) {}

LogEntry TriangularOperator::log_entry(Index n, Index m) const {
  if (n == 0 || m == 0) throw DomainError("operator indices are 1-based");
  switch (shape_) {
    case Shape::lower_triangular:
      if (m > n) return {};
      break;
    case Shape::diagonal:
      if (m != n) return {};
      break;
    case Shape::sub_diagonal:
      if (m + 1 != n) return {};
      break;
    case Shape::super_diagonal:
      if (m != n + 1) return {};
      break;
  }
  return entry_(n, m);
}

Complex TriangularOperator::entry(Index n, Index m) const {
  LogEntry e = log_entry(n, m);
  if (e.log_abs == -kInf) return 0.0;
  return e.phase * std::exp(e.log_abs);
}

LogEntry delta_log_entry(Index n, Index m) {
  if (m == 0 || m > n) return {};
  return real_entry(log_binomial(n - 1, m - 1), (m - 1) % 2 == 1);
}

TriangularOperator identity_operator() {
  return {"identity", Shape::diagonal, [](Index, Index) { return real_entry(0.0); }};
}

TriangularOperator cesaro_operator() {
  return {"cesaro", Shape::lower_triangular,
          [](Index n, Index) { return real_entry(-std::log(static_cast<double>(n))); }};
}

TriangularOperator cesaro_inverse_operator() {
  return {"cesaro_inverse", Shape::lower_triangular, [](Index n, Index m) -> LogEntry {
            if (m == n) return real_entry(std::log(static_cast<double>(n)));
            if (m + 1 == n) return real_entry(std::log(static_cast<double>(n - 1)), true);
            return {};
          }};
}

TriangularOperator delta_operator() {
  return {"delta", Shape::lower_triangular, delta_log_entry};
}

TriangularOperator right_shift_operator() {
  return {"shift", Shape::sub_diagonal, [](Index, Index) { return real_entry(0.0); }};
}

TriangularOperator diff_operator() {
  return {"diff", Shape::super_diagonal,
          [](Index n, Index) { return real_entry(std::log(static_cast<double>(n))); }};
}

TriangularOperator diagonal_operator(std::string name, std::function<Complex(Index)> d) {
  return {std::move(name), Shape::diagonal, [d](Index n, Index) -> LogEntry {
            Complex v = d(n);
            double r = std::abs(v);
            if (r == 0.0) return {};
            return {std::log(r), v / r};
          }};
}

TruncatedMatrix<Complex> truncate(const TriangularOperator& op, Index N) {
  if (op.name() == "delta" && N > kDeltaDenseLimit) {
    throw OverflowError("dense double truncation of delta overflows beyond N=" +
                        std::to_string(kDeltaDenseLimit));
  }
  TruncatedMatrix<Complex> a(N, op.name() + "@N=" + std::to_string(N));
  for (Index n = 1; n <= N; ++n) {
    for (Index m = 1; m <= N; ++m) a(n, m) = op.entry(n, m);
  }
  return a;
}

std::string to_csv(const TruncatedMatrix<Complex>& a) {
  std::string out;
  for (Index n = 1; n <= a.N; ++n) {
    for (Index m = 1; m <= a.N; ++m) {
      if (m > 1) out += ',';
      out += fmt17(a(n, m).real());
      out += ',';
      out += fmt17(a(n, m).imag());
    }
    out += '\n';
  }
  return out;
}

std::vector<Complex> delta_apply(std::span<const Complex> x) {
  if (x.size() > kDeltaDenseLimit) throw OverflowError("delta_apply: binomials overflow doubles");
  std::vector<Complex> y(x.size());
  for (Index n = 1; n <= x.size(); ++n) {
    Complex acc = 0.0;
    double c = 1.0;  // C(n-1, m-1)
    for (Index m = 1; m <= n; ++m) {
      acc += ((m - 1) % 2 ? -c : c) * x[m - 1];
      c = c * static_cast<double>(n - m) / static_cast<double>(m);
    }
    y[n - 1] = acc;
  }
  return y;
}

double log_weighted_norm(std::span<const Complex> x, const WeightFamily& W, int k) {
  double best = -kInf;
  if (x.empty()) return best;
  auto alpha = W.alpha().range(1, x.size());
  for (Index n = 1; n <= x.size(); ++n) {
    double r = std::abs(x[n - 1]);
    if (r == 0.0) continue;
    best = std::max(best, W.log_weight(k, alpha[n - 1]) + std::log(r));
  }
  return best;
}

double weighted_norm(std::span<const Complex> x, const WeightFamily& W, int k) {
  return std::exp(log_weighted_norm(x, W, k));
}

TriangularOperator conjugate_to_c0(const TriangularOperator& A, const WeightFamily& W, int k, int l) {
  if (l < k) throw DomainError("conjugate_to_c0 requires l >= k");
  return {A.name() + "~", A.shape(), [A, W, k, l](Index n, Index m) -> LogEntry {
            LogEntry e = A.log_entry(n, m);
            if (e.log_abs == -kInf) return e;
            e.log_abs += W.log_weight(l, n) - W.log_weight(k, m);
            return e;
          }};
}

C0ContinuityVerdict c0_continuity_test(const TriangularOperator& A, Index N, Index M, const C0Options& opts) {
  if (M < 1 || N < M) throw DomainError("c0_continuity_test requires N >= M >= 1");
  ScanTracker rows(static_cast<double>(N) / 10.0, Scale::log);
  std::vector<double> col_max(M, -kInf);
  std::vector<double> col_last(M, -kInf);
  for (Index n = 1; n <= N; ++n) {
    double row = -kInf;
    Index m_hi = std::min(N, n + 1);
    for (Index m = 1; m <= m_hi; ++m) {
      double la = A.log_entry(n, m).log_abs;
      row = log_add_exp(row, la);
      if (m <= M) {
        col_max[m - 1] = std::max(col_max[m - 1], la);
        if (n == N) col_last[m - 1] = la;
      }
    }
    rows.add(static_cast<double>(n), n, row);
  }
  C0ContinuityVerdict v;
  GrowthVerdict g = make_verdict(rows, N, opts.rule);
  v.row_sup = g.sup_value;
  v.log_row_sup = g.log_sup_value;
  v.row_witness = g.witness_index;
  v.rows_bounded = boundedness_rule(g, opts.rule) == Status::holds;
  v.column_decay = true;
  for (Index m = 0; m < M; ++m) {
    if (col_max[m] == -kInf) continue;
    if (col_last[m] > std::log(opts.column_tolerance) + col_max[m]) v.column_decay = false;
  }
  v.continuous_evidence = v.rows_bounded && v.column_decay;
  return v;
}

std::vector<std::string> step_operator_names() {
  return {"cesaro", "cesaro_inverse", "diff", "delta", "shift"};
}

GrowthVerdict step_continuity_test(std::string_view op, const WeightFamily& W, int k, int l, Index horizon,
                                   const DecisionRule& rule) {
  if (l < k) throw DomainError("step_continuity_test requires l >= k");
  if (horizon < 2) throw DomainError("horizon must be >= 2");
  bool known = false;
  for (const auto& name : step_operator_names()) known = known || name == op;
  if (!known) throw DomainError("unknown operator: " + std::string(op));

  Index fh = W.alpha().finite_horizon(horizon + 1);
  if (fh < 2) throw DomainError("alpha overflows before the scan starts");
  Index h = std::min(horizon, fh - 1);
  auto alpha = W.alpha().range(1, h + 1);
  auto lw = [&](int r, Index n) { return W.log_weight(r, alpha[n - 1]); };
  auto logn = [](Index n) { return std::log(static_cast<double>(n)); };

  ScanTracker scan(static_cast<double>(h) / 10.0, Scale::log);
  double prefix = -kInf;
  for (Index n = 1; n <= h; ++n) {
    double score;
    if (op == "cesaro") {
      prefix = log_add_exp(prefix, -lw(k, n));
      score = lw(l, n) - logn(n) + prefix;
    } else if (op == "cesaro_inverse") {
      score = logn(n) + lw(l, n) - lw(k, n);
      if (n >= 2) score = log_add_exp(score, logn(n - 1) + lw(l, n) - lw(k, n - 1));
    } else if (op == "diff") {
      score = logn(n) + lw(l, n) - lw(k, n + 1);
    } else if (op == "shift") {
      score = lw(l, n + 1) - lw(k, n);
    } else {
      score = -kInf;
      double lc = 0.0;  // log C(n-1, m-1)
      for (Index m = 1; m <= n; ++m) {
        score = log_add_exp(score, lw(l, n) - lw(k, m) + lc);
        if (m < n) lc += logn(n - m) - logn(m);
      }
    }
    scan.add(static_cast<double>(n), n, score);
  }
  GrowthVerdict v = make_verdict(scan, h, rule);
  v.status = boundedness_rule(v, rule);
  return v;
}

std::optional<int> find_continuity_step(std::string_view op, const WeightFamily& W, int k, Index horizon,
                                        int l_max, const DecisionRule& rule) {
  for (int l = k; l <= l_max; ++l) {
    if (step_continuity_test(op, W, k, l, horizon, rule).status == Status::holds) return l;
  }
  return std::nullopt;
}

}  // namespace cesaro
