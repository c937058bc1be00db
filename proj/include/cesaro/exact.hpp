// Exact rational tier (GMP) for the algebraic identities between 𝒞, Δ, D, S_r.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <vector>

#include "cesaro/matrix.hpp"

namespace cesaro {

using Rational = mpq_class;
using RationalMatrix = TruncatedMatrix<Rational>;
using RationalVector = std::vector<Rational>;

inline constexpr Index kExactLimit = 64;

RationalMatrix exact_cesaro(Index N);
RationalMatrix exact_delta(Index N);
RationalMatrix exact_diag_inverse_n(Index N);

/// Column m of Δ truncated to N: (-1)^{m-1} C(n-1, m-1).
RationalVector exact_delta_column(Index m, Index N);

/// max |a - b| over entries, converted to double after exact subtraction.
double max_abs_deviation(const RationalMatrix& a, const RationalMatrix& b);
double max_abs_deviation(const RationalVector& a, const RationalVector& b, Index count);

/// Numerators in [-99, 99], denominators in [1, 99].
RationalVector random_rational_vector(Index N, std::mt19937_64& rng);

struct FactorizationReport {
  Index N = 0;
  bool delta_checked = false;
  double delta_involution_deviation = 0.0;
  double delta_similarity_deviation = 0.0;
  double inverse_factorization_deviation = 0.0;
  double round_trip_deviation = 0.0;
  int vectors = 0;
};

/// ΔΔ = I and Δ diag(1/n) Δ = 𝒞 (when N ≤ n_exact), and
/// (I - S_r) D S_r y = 𝒞⁻¹ y on coordinates 1..N-1 for random rational y.
FactorizationReport verify_factorizations(Index N, int vectors = 100, std::uint64_t seed = 1,
                                          Index n_exact = kExactLimit);

/// max |𝒞 v - v/m| for v = Δe_m truncated to N, exact.
double eigen_relation_deviation(Index m, Index N);

}  // namespace cesaro
