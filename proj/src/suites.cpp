#include "cesaro/suites.hpp"

#include <algorithm>
#include <chrono>
#include <random>

#include "cesaro/ergodic.hpp"
#include "cesaro/exact.hpp"
#include "cesaro/finite_type.hpp"
#include "cesaro/resolvent.hpp"

namespace cesaro {

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::vector<std::string> suite_names() {
  return {"factorizations", "eigen", "sandwich", "resolvent", "ergodic", "finite"};
}

namespace {

CheckResult check(std::string label, bool ok, double value, std::string detail = {}) {
  return {std::move(label), ok, value, std::move(detail)};
}

// Uniform in |z| ≤ radius, rejecting points within `gap` of Σ₀.
std::vector<Complex> random_off_sigma0(int count, double radius, double gap, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-radius, radius);
  std::vector<Complex> out;
  while (static_cast<int>(out.size()) < count) {
    Complex z(u(rng), u(rng));
    if (std::abs(z) <= radius && distance_to_sigma0(z) > gap) out.push_back(z);
  }
  return out;
}

void factorizations(SuiteReport& r, const SuiteOptions& o) {
  const Index N = o.N.value_or(16);
  const int vectors = o.samples.value_or(100);
  FactorizationReport f = verify_factorizations(N, vectors, o.seed);
  if (f.delta_checked) {
    r.checks.push_back(check("factorizations/delta_involution", f.delta_involution_deviation == 0.0,
                             f.delta_involution_deviation, "max|ΔΔ - I|"));
    r.checks.push_back(check("factorizations/delta_similarity", f.delta_similarity_deviation == 0.0,
                             f.delta_similarity_deviation, "max|Δ diag(1/n) Δ - C|"));
  }
  r.checks.push_back(check("factorizations/inverse_factorization", f.inverse_factorization_deviation == 0.0,
                           f.inverse_factorization_deviation,
                           "max|(I - S_r) D S_r y - C⁻¹y| on 1..N-1 over " + std::to_string(vectors) + " vectors"));
  r.checks.push_back(check("factorizations/round_trip", f.round_trip_deviation == 0.0, f.round_trip_deviation,
                           "max|C C⁻¹ y - y|"));
}

void eigen(SuiteReport& r, const SuiteOptions& o) {
  const Index N = o.N.value_or(50);
  const Index m_max = o.m.value_or(10);
  for (Index m = 1; m <= m_max; ++m) {
    double d = eigen_relation_deviation(m, N);
    r.checks.push_back(check("eigen/delta_column_m" + std::to_string(m), d == 0.0, d, "max|C Δe_m - Δe_m/m|"));
  }
}

void sandwich(SuiteReport& r, const SuiteOptions& o) {
  const int count = o.samples.value_or(200);
  const double slack = 1e-3;
  const std::vector<Index> Ns = {10, 100, 1000, 10000};
  auto lambdas = random_off_sigma0(count, 3.0, 0.05, o.seed);
  std::vector<double> lower(lambdas.size()), upper(lambdas.size());
  parallel_for(lambdas.size(), o.threads, [&](Index i) {
    double lo = kInf, up = kInf;
    for (Index N : Ns) {
      SandwichWitness w = sandwich_at(lambdas[i], N);
      lo = std::min(lo, w.log_product - w.log_lower);
      up = std::min(up, w.log_upper - w.log_product);
    }
    lower[i] = lo;
    upper[i] = up;
  });
  const double tol = std::log1p(-slack);
  double lo = *std::min_element(lower.begin(), lower.end());
  double up = *std::min_element(upper.begin(), upper.end());
  std::string what = std::to_string(lambdas.size()) + " points, N in {10,100,1000,10000}";
  r.checks.push_back(check("sandwich/lower_bound", lo >= tol, lo, "min log(product/lower), " + what));
  r.checks.push_back(check("sandwich/upper_bound", up >= tol, up, "min log(upper/product), " + what));
}

void resolvent(SuiteReport& r, const SuiteOptions& o) {
  const int count = o.samples.value_or(50);
  const Index N = o.N.value_or(20);
  auto mus = random_off_sigma0(count, 3.0, 0.05, o.seed);
  std::vector<double> res(mus.size());
  parallel_for(mus.size(), o.threads, [&](Index i) { res[i] = reconstruction_residual(mus[i], N); });
  double worst = *std::max_element(res.begin(), res.end());
  r.checks.push_back(check("resolvent/reconstruction", worst < 1e-9, worst,
                           "max|(C - μI) R_N(μ) - I| over " + std::to_string(mus.size()) + " points, N = " +
                               std::to_string(N)));
}

void ergodic(SuiteReport& r, const SuiteOptions& o) {
  const int trials = o.samples.value_or(50);
  const Index N = o.N.value_or(10);
  for (const char* preset : {"n", "log_n", "sqrt_n"}) {
    WeightFamily W(make_alpha(preset));
    PowerBoundedReport p = power_bounded_check(W, 1, trials, 200, 50, o.seed);
    r.checks.push_back(check(std::string("ergodic/power_bounded_") + preset, p.passed, p.max_ratio,
                             "max q_1(C^m x)/q_1(x), m <= 200"));
  }
  WeightFamily W(make_alpha("n"));
  std::vector<Complex> e1(N, 0.0);
  e1[0] = 1.0;
  IterationTrace t = iterates_limit_check(e1, W, 1, 1e-6);
  r.checks.push_back(check("ergodic/iterates_to_projection", t.converged, t.distances.back(),
                           "q_1(C^m e_1 - 1) at m = " + std::to_string(t.m_values.back())));
  RangeInverse ri = range_inverse_matrices(N);
  r.checks.push_back(check("ergodic/range_inverse_AB", ri.residual_ab == 0.0, ri.residual_ab, "max|AB - I|"));
  r.checks.push_back(check("ergodic/range_inverse_BA", ri.residual_ba == 0.0, ri.residual_ba, "max|BA - I|"));
  bool entries = ri.B(1, 1) == Rational(2) && (N < 2 || ri.B(2, 2) == Rational(3, 2));
  r.checks.push_back(check("ergodic/range_inverse_entries", entries, ri.B(1, 1).get_d(), "b11 = 2, b22 = 3/2"));
  GrowthVerdict b = b_continuity_check(W, 1, o.horizon.value_or(100000));
  r.checks.push_back(check("ergodic/inverse_continuity", b.status == Status::holds, b.sup_value,
                           "sup_n Σ_m ṽ_2(n)/ṽ_1(m)|b_nm|"));
}

void finite(SuiteReport& r, const SuiteOptions& o) {
  const Index horizon = o.horizon.value_or(1000000);
  FiniteTypeWeights lognp1 = finite_log_np1();
  for (int k = 1; k <= 4; ++k) {
    FtVerdict v = ft_continuity_criterion(lognp1, k, k + 1, horizon);
    r.checks.push_back(check("finite/log_np1_bounded_k" + std::to_string(k), v.verdict.status == Status::holds,
                             v.verdict.sup_value, "sup criterion, l = k + 1"));
  }
  auto values = ft_criterion_log_values(lognp1, 1, 2, horizon);
  double worst = -kInf;
  for (Index n = 1; n <= values.size(); ++n) {
    double x = std::log(static_cast<double>(n) + 1.0);
    double majorant = 2.0 * (1.0 + x) / std::sqrt(static_cast<double>(n) + 1.0);
    worst = std::max(worst, std::exp(values[n - 1]) - majorant);
  }
  r.checks.push_back(check("finite/log_np1_majorant", worst <= 1e-12, worst,
                           "max_n criterion - 2(1 + log(n+1))/(n+1)^{1/2}"));

  FiniteTypeWeights linear = finite_from_alpha(make_alpha("n"));
  const Index h_linear = std::min<Index>(horizon, 100000);
  int diverging = 0;
  double least = kInf;
  for (int l = 1; l <= 64; ++l) {
    FtVerdict v = ft_continuity_criterion(linear, 1, l, h_linear);
    if (v.verdict.status == Status::fails) ++diverging;
    least = std::min(least, v.verdict.log_sup_value);
  }
  r.checks.push_back(check("finite/linear_alpha_diverges", diverging == 64, least,
                           std::to_string(diverging) + " of 64 steps l diverge for k = 1; value is the least log sup"));

  const bool j_ok = staircase_j(2) == 4 && staircase_j(3) == 96 && staircase_j(4) == 7077888;
  r.checks.push_back(check("finite/staircase_j_values", j_ok, staircase_j(4).get_d(), "j(2), j(3), j(4)"));
  const double bound = staircase_lower_bound(4, 1);
  r.checks.push_back(check("finite/staircase_lower_bound", std::abs(bound - 64.0) <= 1e-12 * 64.0, bound,
                           "k^{1/l} k^{k/l-1}/4 at (k, l) = (4, 1)"));
  FtActsReport acts = ft_cesaro_acts(finite_staircase(), std::min<Index>(horizon, 100000), 64, 1);
  r.checks.push_back(check("finite/staircase_does_not_act", acts.status == Status::fails,
                           acts.steps.front().last.verdict.log_sup_value,
                           "k = 1 fails for every l <= 64; value is the log sup at l = 64"));
}

}  // namespace

SuiteReport run_suite(std::string_view name, const SuiteOptions& opts) {
  SuiteReport r;
  r.suite = std::string(name);
  auto t0 = std::chrono::steady_clock::now();
  if (name == "factorizations") {
    factorizations(r, opts);
  } else if (name == "eigen") {
    eigen(r, opts);
  } else if (name == "sandwich") {
    sandwich(r, opts);
  } else if (name == "resolvent") {
    resolvent(r, opts);
  } else if (name == "ergodic") {
    ergodic(r, opts);
  } else if (name == "finite") {
    finite(r, opts);
  } else {
    throw DomainError("unknown suite: " + std::string(name));
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace cesaro
