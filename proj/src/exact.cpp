#include "cesaro/exact.hpp"

#include <algorithm>
#include <span>

#include "cesaro/operators.hpp"

namespace cesaro {

namespace {

mpz_class binomial(Index n, Index k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

RationalVector truncated(const RationalVector& v, Index len) {
  return RationalVector(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(std::min(len, v.size())));
}

}  // namespace

RationalMatrix exact_cesaro(Index N) {
  RationalMatrix c(N, "cesaro");
  for (Index n = 1; n <= N; ++n) {
    for (Index m = 1; m <= n; ++m) c(n, m) = Rational(1, n);
  }
  return c;
}

RationalMatrix exact_delta(Index N) {
  RationalMatrix d(N, "delta");
  for (Index n = 1; n <= N; ++n) {
    for (Index m = 1; m <= n; ++m) {
      Rational b(binomial(n - 1, m - 1));
      d(n, m) = (m % 2 == 1) ? b : Rational(-b);
    }
  }
  return d;
}

RationalMatrix exact_diag_inverse_n(Index N) {
  RationalMatrix d(N, "diag(1/n)");
  for (Index n = 1; n <= N; ++n) d(n, n) = Rational(1, n);
  return d;
}

RationalVector exact_delta_column(Index m, Index N) {
  RationalVector v(N, Rational(0));
  for (Index n = m; n <= N; ++n) {
    Rational b(binomial(n - 1, m - 1));
    v[n - 1] = (m % 2 == 1) ? b : Rational(-b);
  }
  return v;
}

double max_abs_deviation(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.N != b.N) throw DomainError("matrix dimensions differ");
  Rational worst = 0;
  for (Index i = 0; i < a.data.size(); ++i) {
    Rational d = abs(a.data[i] - b.data[i]);
    if (d > worst) worst = d;
  }
  return worst.get_d();
}

double max_abs_deviation(const RationalVector& a, const RationalVector& b, Index count) {
  if (a.size() < count || b.size() < count) throw DomainError("vectors shorter than compared range");
  Rational worst = 0;
  for (Index i = 0; i < count; ++i) {
    Rational d = abs(a[i] - b[i]);
    if (d > worst) worst = d;
  }
  return worst.get_d();
}

RationalVector random_rational_vector(Index N, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-99, 99);
  std::uniform_int_distribution<long> den(1, 99);
  RationalVector v(N);
  for (auto& x : v) {
    x = Rational(num(rng), den(rng));
    x.canonicalize();
  }
  return v;
}

FactorizationReport verify_factorizations(Index N, int vectors, std::uint64_t seed, Index n_exact) {
  if (N < 1) throw DomainError("N must be >= 1");
  FactorizationReport r;
  r.N = N;
  r.vectors = vectors;
  if (N <= n_exact) {
    r.delta_checked = true;
    RationalMatrix delta = exact_delta(N);
    r.delta_involution_deviation = max_abs_deviation(multiply(delta, delta), identity_matrix<Rational>(N));
    RationalMatrix similar = multiply(multiply(delta, exact_diag_inverse_n(N)), delta);
    r.delta_similarity_deviation = max_abs_deviation(similar, exact_cesaro(N));
  }
  std::mt19937_64 rng(seed);
  for (int t = 0; t < vectors; ++t) {
    RationalVector y = random_rational_vector(N, rng);
    std::span<const Rational> ys(y);
    RationalVector expected = cesaro_inverse_apply(ys);

    // Truncated chain: S_r (N) -> D (N-1) -> I - S_r (N-1).
    RationalVector s = truncated(shift_apply(ys), N);
    RationalVector ds = diff_apply(std::span<const Rational>(s));
    RationalVector sds = truncated(shift_apply(std::span<const Rational>(ds)), ds.size());
    RationalVector chain(ds.size());
    for (Index i = 0; i < ds.size(); ++i) chain[i] = ds[i] - sds[i];
    r.inverse_factorization_deviation =
        std::max(r.inverse_factorization_deviation, max_abs_deviation(chain, expected, N - 1));

    RationalVector back = cesaro_inverse_apply(std::span<const Rational>(cesaro_apply(ys)));
    r.round_trip_deviation = std::max(r.round_trip_deviation, max_abs_deviation(back, y, N));
  }
  return r;
}

double eigen_relation_deviation(Index m, Index N) {
  if (m < 1 || N < 1) throw DomainError("m and N must be >= 1");
  RationalVector v = exact_delta_column(m, N);
  RationalVector cv = cesaro_apply(std::span<const Rational>(v));
  RationalVector scaled(N);
  for (Index i = 0; i < N; ++i) scaled[i] = v[i] / Rational(m);
  return max_abs_deviation(cv, scaled, N);
}

}  // namespace cesaro
