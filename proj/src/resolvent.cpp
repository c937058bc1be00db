#include "cesaro/resolvent.hpp"

#include <algorithm>
#include <numbers>

namespace cesaro {

namespace {

constexpr double kVanishing = 1e-14;

void require_off_sigma0(Complex mu) {
  if (distance_to_sigma0(mu) <= kVanishing) throw DomainError("mu lies on Sigma0");
}

// Σ_{j≤n} log(1 - 1/(μj)) for n = 0..N with the phase kept in (-π, π].
std::vector<Complex> log_factor_prefix(Complex mu, Index N) {
  std::vector<Complex> L(N + 1, 0.0);
  Complex w = 1.0 / mu;
  for (Index j = 1; j <= N; ++j) {
    Complex s = L[j - 1] + std::log(1.0 - w / static_cast<double>(j));
    L[j] = {s.real(), std::remainder(s.imag(), 2.0 * std::numbers::pi)};
  }
  return L;
}

// base[n-1] = -log n - log P_n + log Σ_{m<n} P_{m-1}/v_k(m), with
// P_n = ∏_{j≤n} |1 - 1/(μj)|, so that row n of |E_μ| conjugated to steps
// (k, l) sums to exp(base[n-1] + log v_l(n)).
std::vector<double> strict_row_base(Complex mu, const std::vector<AlphaValue>& alpha, const WeightFamily& W,
                                    int k) {
  Index h = alpha.size();
  std::vector<double> base(h, -kInf);
  Complex w = 1.0 / mu;
  double log_p = 0.0;    // log P_{n-1}
  double log_sum = -kInf;
  for (Index n = 1; n <= h; ++n) {
    double dn = static_cast<double>(n);
    double log_p_prev = log_p;
    double re = 1.0 - w.real() / dn;
    double im = w.imag() / dn;
    log_p += 0.5 * std::log(re * re + im * im);
    if (n >= 2) base[n - 1] = -std::log(dn) - log_p + log_sum;
    log_sum = log_add_exp(log_sum, log_p_prev - W.log_weight(k, alpha[n - 1]));
  }
  return base;
}

GrowthVerdict evaluate_rows(const std::vector<double>& base, const std::vector<AlphaValue>& alpha,
                            const WeightFamily& W, int l, const DecisionRule& rule) {
  Index h = alpha.size();
  ScanTracker scan(static_cast<double>(h) / 10.0, Scale::log);
  for (Index n = 2; n <= h; ++n) {
    scan.add(static_cast<double>(n), n, base[n - 1] + W.log_weight(l, alpha[n - 1]));
  }
  GrowthVerdict v = make_verdict(scan, h, rule);
  v.status = boundedness_rule(v, rule);
  return v;
}

ProbeWitness witness_of(Complex mu, int l, const GrowthVerdict& v) {
  return {mu, l, v.status, v.log_sup_value, v.witness_index, v.grew_last_decade};
}

std::vector<AlphaValue> probe_alpha(const WeightFamily& W, Index horizon) {
  Index h = W.alpha().finite_horizon(horizon);
  if (h < 2) throw DomainError("horizon must be >= 2");
  return W.alpha().range(1, h);
}

}  // namespace

double inverse_real_part(Complex z) {
  if (z == Complex(0.0)) throw DomainError("a(z) undefined at z = 0");
  return (1.0 / z).real();
}

bool in_closed_disc(Complex z, double tol) { return std::abs(z - 0.5) <= 0.5 + tol; }

double distance_to_sigma(Complex z) {
  double best = std::abs(z - 1.0);
  double x = z.real();
  if (x > 0.0 && x < 1.0) {
    double t = 1.0 / x;
    for (double n : {std::floor(t), std::ceil(t)}) {
      if (n >= 1.0) best = std::min(best, std::abs(z - 1.0 / n));
    }
  } else if (x <= 0.0) {
    best = std::min(best, std::abs(z));
  }
  return best;
}

double distance_to_sigma0(Complex z) { return std::min(std::abs(z), distance_to_sigma(z)); }

ProductLog product_log(Complex mu, Index N) {
  if (mu == Complex(0.0)) throw DomainError("product_log undefined at mu = 0");
  ProductLog r;
  Complex w = 1.0 / mu;
  for (Index n = 1; n <= N; ++n) {
    double dn = static_cast<double>(n);
    double re = 1.0 - w.real() / dn;
    double im = w.imag() / dn;
    double f = std::hypot(re, im);
    if (f <= kVanishing) {
      r.value = -kInf;
      r.vanishing = true;
      r.vanishing_index = n;
      return r;
    }
    r.value += std::log(f);
  }
  return r;
}

double log_u(Complex lambda) {
  double r = std::abs(lambda);
  double d = distance_to_sigma0(lambda);
  if (d == 0.0) return -kInf;
  double D = 3.0 * (1.0 + r) * (1.0 + r) / (std::pow(r, 1.5) * std::pow(d, 2.5));
  return -1.0 / r - 2.0 * D;
}

double log_v(Complex lambda) {
  double r = std::abs(lambda);
  if (r == 0.0) throw DomainError("v(0) undefined");
  return 1.0 / r + 1.0 / (r * r);
}

std::vector<Complex> disc_samples(Complex center, double radius, const DiscSampling& sampling) {
  std::vector<Complex> out{center};
  const double two_pi = 2.0 * std::numbers::pi;
  for (int j = 0; j < sampling.ring; ++j) {
    out.push_back(center + std::polar(radius, two_pi * j / sampling.ring));
  }
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (int j = 0; j < sampling.interior; ++j) {
    double rho = radius * std::sqrt((j + 0.5) / sampling.interior);
    out.push_back(center + std::polar(rho, golden * j));
  }
  return out;
}

SandwichBounds sandwich_bounds(Complex lambda, double delta, const DiscSampling& sampling) {
  if (!(delta >= 0.0)) throw DomainError("delta must be non-negative");
  double d = distance_to_sigma0(lambda);
  if (d <= delta) throw DomainError("closed disc around lambda touches Sigma0");
  SandwichBounds b;
  b.lambda = lambda;
  b.delta = delta;
  b.a_val = inverse_real_part(lambda);
  b.log_u_val = log_u(lambda);
  b.log_v_val = log_v(lambda);
  b.d_lambda = d;
  b.log_d_delta = kInf;
  b.log_D_delta = -kInf;
  for (Complex mu : disc_samples(lambda, delta, sampling)) {
    b.log_d_delta = std::min(b.log_d_delta, log_u(mu));
    b.log_D_delta = std::max(b.log_D_delta, log_v(mu));
  }
  return b;
}

SandwichReport sandwich_check(Complex lambda, double delta, std::span<const Index> N_list,
                              const DiscSampling& sampling, double slack) {
  SandwichReport rep;
  rep.bounds = sandwich_bounds(lambda, delta, sampling);
  std::vector<Index> checkpoints(N_list.begin(), N_list.end());
  std::sort(checkpoints.begin(), checkpoints.end());
  if (checkpoints.empty()) return rep;
  const double lo_slack = std::log1p(-slack);
  const double hi_slack = std::log1p(slack);
  for (Complex mu : disc_samples(lambda, delta, sampling)) {
    double a = inverse_real_part(mu);
    Complex w = 1.0 / mu;
    double lp = 0.0;
    std::size_t next = 0;
    for (Index n = 1; n <= checkpoints.back(); ++n) {
      double dn = static_cast<double>(n);
      lp += std::log(std::hypot(1.0 - w.real() / dn, w.imag() / dn));
      while (next < checkpoints.size() && checkpoints[next] == n) {
        SandwichWitness wt{mu, n, lp, rep.bounds.log_d_delta - a * std::log(dn),
                           rep.bounds.log_D_delta - a * std::log(dn)};
        double lower_margin = wt.log_product - wt.log_lower;
        double upper_margin = wt.log_upper - wt.log_product;
        if (lower_margin < rep.worst_lower_margin) {
          rep.worst_lower_margin = lower_margin;
          rep.worst_lower = wt;
        }
        if (upper_margin < rep.worst_upper_margin) {
          rep.worst_upper_margin = upper_margin;
          rep.worst_upper = wt;
        }
        if (lower_margin < lo_slack || upper_margin < -hi_slack) rep.passed = false;
        ++rep.checks;
        ++next;
      }
    }
  }
  return rep;
}

SandwichWitness sandwich_at(Complex lambda, Index N) {
  double a = inverse_real_part(lambda);
  double ln = std::log(static_cast<double>(N));
  return {lambda, N, product_log(lambda, N).value, log_u(lambda) - a * ln, log_v(lambda) - a * ln};
}

ResolventDecomposition resolvent_entries(Complex mu) {
  require_off_sigma0(mu);
  TriangularOperator diag("resolvent_diag", Shape::diagonal, [mu](Index n, Index) -> LogEntry {
    Complex d = 1.0 / (1.0 / static_cast<double>(n) - mu);
    return {std::log(std::abs(d)), d / std::abs(d)};
  });
  TriangularOperator strict("resolvent_strict", Shape::lower_triangular, [mu](Index n, Index m) -> LogEntry {
    if (m >= n) return {};
    Complex w = 1.0 / mu;
    Complex L = 0.0;
    for (Index j = m; j <= n; ++j) L += std::log(1.0 - w / static_cast<double>(j));
    return {-std::log(static_cast<double>(n)) - L.real(), std::polar(1.0, -L.imag())};
  });
  return {mu, std::move(diag), std::move(strict)};
}

TruncatedMatrix<Complex> truncated_resolvent(Complex mu, Index N) {
  require_off_sigma0(mu);
  TruncatedMatrix<Complex> R(N, "resolvent");
  std::vector<Complex> L = log_factor_prefix(mu, N);
  Complex scale = -1.0 / (mu * mu);
  for (Index n = 1; n <= N; ++n) {
    double dn = static_cast<double>(n);
    R(n, n) = 1.0 / (1.0 / dn - mu);
    for (Index m = 1; m < n; ++m) {
      R(n, m) = scale * std::exp(-std::log(dn) - (L[n] - L[m - 1]));
    }
  }
  return R;
}

double reconstruction_residual(Complex mu, Index N) {
  TruncatedMatrix<Complex> A = truncate(cesaro_operator(), N);
  for (Index n = 1; n <= N; ++n) A(n, n) -= mu;
  TruncatedMatrix<Complex> P = multiply(A, truncated_resolvent(mu, N));
  double worst = 0.0;
  for (Index n = 1; n <= N; ++n) {
    for (Index m = 1; m <= N; ++m) {
      worst = std::max(worst, std::abs(P(n, m) - (n == m ? 1.0 : 0.0)));
    }
  }
  return worst;
}

ResolventNormReport resolvent_norm_bound_check(Complex lambda, const WeightFamily& W, int k, Index horizon,
                                               const DiscSampling& sampling, const DecisionRule& rule) {
  double gap = std::abs(lambda - 0.5) - 0.5;
  if (!(gap > 0.0)) throw DomainError("lambda must lie outside the closed disc |z - 1/2| <= 1/2");
  ResolventNormReport rep;
  rep.lambda = lambda;
  rep.delta = 0.5 * gap;
  auto alpha = probe_alpha(W, horizon);
  rep.horizon = alpha.size();
  rep.bounded = true;
  for (Complex mu : disc_samples(lambda, rep.delta, sampling)) {
    auto base = strict_row_base(mu, alpha, W, k);
    double log_mu2 = 2.0 * std::log(std::abs(mu));
    ScanTracker scan(static_cast<double>(alpha.size()) / 10.0, Scale::log);
    for (Index n = 1; n <= alpha.size(); ++n) {
      double diag = -std::log(std::abs(1.0 / static_cast<double>(n) - mu));
      double strict = base[n - 1] + W.log_weight(k, alpha[n - 1]) - log_mu2;
      scan.add(static_cast<double>(n), n, log_add_exp(diag, strict));
    }
    GrowthVerdict v = make_verdict(scan, alpha.size(), rule);
    // The norm may approach its limit from below, so only the ratio is judged.
    double ratio = v.sup_value * (1.0 - inverse_real_part(mu));
    if (!std::isfinite(ratio)) rep.bounded = false;
    rep.min_ratio = std::min(rep.min_ratio, ratio);
    if (ratio > rep.max_ratio) {
      rep.max_ratio = ratio;
      rep.worst_mu = mu;
      rep.worst_norm = v.sup_value;
    }
  }
  if (rep.max_ratio > rule.divergence_threshold) rep.bounded = false;
  return rep;
}

ProbeVerdict equicontinuity_probe(Complex lambda, double delta, const WeightFamily& W, int k, Index horizon,
                                  const ProbeOptions& opts) {
  if (!(delta >= 0.0)) throw DomainError("delta must be non-negative");
  if (distance_to_sigma0(lambda) <= delta) throw DomainError("closed disc around lambda touches Sigma0");
  ProbeVerdict out;
  out.lambda = lambda;
  out.delta = delta;
  out.k = k;
  auto alpha = probe_alpha(W, horizon);
  out.horizon = alpha.size();
  const auto samples = disc_samples(lambda, delta, opts.sampling);
  const int l_top = k + opts.l_max;

  auto give_up = [&](Complex mu, const std::vector<double>& base) {
    GrowthVerdict v = evaluate_rows(base, alpha, W, l_top, opts.rule);
    out.worst = witness_of(mu, l_top, v);
    out.witnesses = {out.worst};
    out.sup_row_sum = v.sup_value;
    out.log_sup_row_sum = v.log_sup_value;
    out.status = v.grew_last_decade ? Status::fails : Status::inconclusive;
    return out;
  };

  // Pass 1: smallest l that works for each sample, raised monotonically.
  int candidate = k;
  for (Complex mu : samples) {
    auto base = strict_row_base(mu, alpha, W, k);
    while (candidate <= l_top && evaluate_rows(base, alpha, W, candidate, opts.rule).status != Status::holds) {
      ++candidate;
    }
    if (candidate > l_top) return give_up(mu, base);
  }

  // Pass 2: confirm the candidate on every sample.
  for (; candidate <= l_top; ++candidate) {
    std::vector<ProbeWitness> found(samples.size());
    parallel_for(samples.size(), opts.threads, [&](Index i) {
      auto base = strict_row_base(samples[i], alpha, W, k);
      found[i] = witness_of(samples[i], candidate, evaluate_rows(base, alpha, W, candidate, opts.rule));
    });
    bool all = std::all_of(found.begin(), found.end(),
                           [](const ProbeWitness& w) { return w.status == Status::holds; });
    if (!all) continue;
    out.l_found = candidate;
    out.status = Status::holds;
    out.witnesses = std::move(found);
    out.worst = out.witnesses.front();
    for (const auto& w : out.witnesses) {
      if (w.log_sup > out.worst.log_sup) out.worst = w;
    }
    out.log_sup_row_sum = out.worst.log_sup;
    out.sup_row_sum = std::exp(out.worst.log_sup);
    return out;
  }
  return give_up(samples.front(), strict_row_base(samples.front(), alpha, W, k));
}

}  // namespace cesaro
