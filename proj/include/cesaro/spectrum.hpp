// Symbolic classification of σ_pt, σ and σ* for 𝒞 on E_α, with numeric
// corroboration from eigenvector membership tests and resolvent probes.
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cesaro/resolvent.hpp"
#include "cesaro/weights.hpp"

namespace cesaro {

/// Closed vocabulary of regions: Σ, Σ₀, {1}, {0,1} ∪ D(1), closure(D(1)).
enum class Region { sigma, sigma0, one, zero_one_disc, closed_disc, unknown };

std::string_view region_label(Region r);
bool region_contains(Region r, Complex z, double tol = 1e-12);
/// Symbolic inclusion a ⊆ b; unknown regions are never included.
bool region_subset(Region a, Region b);

struct PointSpectrumVerdict {
  GrowthVerdict verdict;
  std::optional<int> k_found;
};

/// Is Δe_m in some step c₀(v_k), k ≤ k_max?
PointSpectrumVerdict point_spectrum_test(Index m, const WeightFamily& W, Index horizon, int k_max = 64,
                                         const DecisionRule& rule = {});

struct EvidenceSample {
  Complex mu;
  ProbeVerdict probe;
};

struct SpectralReport {
  std::string alpha_name;
  Status status = Status::inconclusive;  // holds when classified
  TriState nuclear = TriState::unknown;
  TriState loglog_finite = TriState::unknown;
  Region sigma_pt = Region::unknown;
  Region sigma = Region::unknown;
  Region sigma_star = Region::unknown;
  GrowthVerdict nuclear_verdict;
  GrowthVerdict loglog_verdict;
  std::vector<EvidenceSample> evidence;
};

struct ClassifyOptions {
  DecisionRule rule;
  bool attach_evidence = true;
  std::vector<Complex> evidence_points = {{0.4, 0.2}, {0.5, 0.5}, {-1.0, 0.0}};
  double evidence_delta = 0.02;
  Index evidence_horizon = 100000;
  ProbeOptions probe{64, DiscSampling{16, 8}, DecisionRule{}, 1};
};

SpectralReport classify_spectrum(const WeightFamily& W, Index horizon, const ClassifyOptions& opts = {});

struct GridSpec {
  double re_min = -0.25, re_max = 1.25;
  double im_min = -0.75, im_max = 0.75;
  Index resolution = 100;  // points per axis
  Index probe_count = 20;
  double margin = 1e-3;
  double probe_delta = 0.02;
  Index horizon = 10000;
  int k = 1;
  ProbeOptions probe{64, DiscSampling{16, 8}, DecisionRule{}, 1};
};

enum class PointClass { resolvent_evidence, spectrum_region, excluded, inconclusive };

struct GridPoint {
  Complex z;
  std::string region_label;  // sigma, sigma_star, resolvent, excluded, unknown
  std::string probe_status;  // holds, fails, inconclusive, skipped, excluded
  double probe_sup = 0.0;
  std::optional<int> l_found;
  PointClass cls = PointClass::inconclusive;
};

struct GridResult {
  GridSpec spec;
  SpectralReport report;
  std::vector<GridPoint> points;  // row-major, top row (largest imaginary part) first
};

GridResult sample_grid(const WeightFamily& W, const GridSpec& spec, Index classify_horizon,
                       unsigned threads = 1);

/// Data rows only; callers prepend their own header lines.
std::string grid_to_csv(const GridResult& g);
std::string grid_to_svg(const GridResult& g);

}  // namespace cesaro
