// Explicit resolvent (𝒞 - μI)⁻¹ = D_μ - μ⁻² E_μ, the product sandwich
// u(λ)/N^{a(λ)} ≤ ∏|1 - 1/(nλ)| ≤ v(λ)/N^{a(λ)}, weighted norm bounds and the
// disc equicontinuity probe.
#pragma once

#include <optional>
#include <span>
#include <vector>

#include "cesaro/common.hpp"
#include "cesaro/matrix.hpp"
#include "cesaro/operators.hpp"
#include "cesaro/weights.hpp"

namespace cesaro {

/// a(z) = Re(1/z).
double inverse_real_part(Complex z);

/// |z - 1/2| ≤ 1/2 (+ tol), equivalently a(z) ≥ 1 for z ≠ 0.
bool in_closed_disc(Complex z, double tol = 0.0);

/// Distance to Σ = {1/n}.
double distance_to_sigma(Complex z);
/// Distance to Σ₀ = Σ ∪ {0}.
double distance_to_sigma0(Complex z);

struct ProductLog {
  double value = 0.0;  // Σ log|1 - 1/(nμ)|, -inf when a factor vanishes
  bool vanishing = false;
  Index vanishing_index = 0;
};

ProductLog product_log(Complex mu, Index N);

/// log u(λ) = -1/|λ| - 2D(λ), D(λ) = 3(1+|λ|)² / (|λ|^{3/2} d(λ)^{5/2}).
double log_u(Complex lambda);
/// log v(λ) = 1/|λ| + 1/|λ|².
double log_v(Complex lambda);

struct DiscSampling {
  int ring = 64;
  int interior = 32;
};

/// Centre, `ring` boundary points and `interior` points of a sunflower lattice.
std::vector<Complex> disc_samples(Complex center, double radius, const DiscSampling& sampling);

struct SandwichBounds {
  Complex lambda;
  double delta = 0.0;
  double a_val = 0.0;
  double log_u_val = 0.0;
  double log_v_val = 0.0;
  double d_lambda = 0.0;
  double log_d_delta = 0.0;  // inf of log u over the disc samples
  double log_D_delta = 0.0;  // sup of log v over the disc samples
};

SandwichBounds sandwich_bounds(Complex lambda, double delta, const DiscSampling& sampling = {});

struct SandwichWitness {
  Complex mu;
  Index N = 0;
  double log_product = 0.0;
  double log_lower = 0.0;
  double log_upper = 0.0;
};

struct SandwichReport {
  SandwichBounds bounds;
  bool passed = true;
  Index checks = 0;
  double worst_lower_margin = kInf;  // min of log product - log lower bound
  double worst_upper_margin = kInf;  // min of log upper bound - log product
  SandwichWitness worst_lower;
  SandwichWitness worst_upper;
};

/// Checks d_δ/N^{a(μ)} ≤ ∏ ≤ D_δ/N^{a(μ)} for each disc sample μ and N.
SandwichReport sandwich_check(Complex lambda, double delta, std::span<const Index> N_list,
                              const DiscSampling& sampling = {}, double slack = 1e-3);

/// Pointwise bounds log(u(λ)/N^a), log(v(λ)/N^a) and the log product.
SandwichWitness sandwich_at(Complex lambda, Index N);

struct ResolventDecomposition {
  Complex mu;
  TriangularOperator diag_part;    // d_nn = 1/(1/n - μ)
  TriangularOperator strict_part;  // e_nm = 1/(n ∏_{j=m}^{n} (1 - 1/(μj))), m < n
};

ResolventDecomposition resolvent_entries(Complex mu);

/// Truncation of D_μ - μ⁻² E_μ.
TruncatedMatrix<Complex> truncated_resolvent(Complex mu, Index N);
/// max |(𝒞 - μI) R_N(μ) - I| at truncation N.
double reconstruction_residual(Complex mu, Index N);

struct ResolventNormReport {
  Complex lambda;
  double delta = 0.0;
  Index horizon = 0;
  bool bounded = false;
  double max_ratio = 0.0;  // ‖R(μ)‖·(1 - a(μ))
  double min_ratio = kInf;
  Complex worst_mu;
  double worst_norm = 0.0;
};

ResolventNormReport resolvent_norm_bound_check(Complex lambda, const WeightFamily& W, int k, Index horizon,
                                               const DiscSampling& sampling = {},
                                               const DecisionRule& rule = {});

struct ProbeOptions {
  int l_max = 64;
  DiscSampling sampling;
  DecisionRule rule;
  unsigned threads = 1;
};

struct ProbeWitness {
  Complex mu;
  int l = 0;
  Status status = Status::inconclusive;
  double log_sup = -kInf;
  Index row = 0;
  bool grew = false;
};

struct ProbeVerdict {
  Complex lambda;
  double delta = 0.0;
  int k = 1;
  Index horizon = 0;
  Status status = Status::inconclusive;  // holds iff l_found
  std::optional<int> l_found;
  double sup_row_sum = 0.0;
  double log_sup_row_sum = -kInf;
  ProbeWitness worst;
  std::vector<ProbeWitness> witnesses;
};

/// Searches l in [k, k + l_max] such that, for every sampled μ in the disc,
/// sup_n Σ_m v_l(n)/v_k(m) |e_nm(μ)| is bounded at the horizon.
ProbeVerdict equicontinuity_probe(Complex lambda, double delta, const WeightFamily& W, int k, Index horizon,
                                  const ProbeOptions& opts = {});

}  // namespace cesaro
