#include <gtest/gtest.h>

#include <random>

#include "cesaro/ergodic.hpp"

using namespace cesaro;

TEST(PowerApply, Examples) {
  std::vector<Rational> e1 = {1, 0, 0};
  EXPECT_EQ(power_apply<Rational>(e1, 1), (std::vector<Rational>{1, Rational(1, 2), Rational(1, 3)}));
  EXPECT_EQ(power_apply<Rational>(e1, 2), (std::vector<Rational>{1, Rational(3, 4), Rational(11, 18)}));
  std::vector<Rational> x = {2, -1, 5, 7};
  EXPECT_EQ(cesaro_means<Rational>(x, 1), cesaro_apply<Rational>(x));
  EXPECT_THROW(power_apply<Rational>(x, 0), DomainError);
}

TEST(CesaroMeans, MatchesAverageOfPowers) {
  std::vector<Rational> x = {1, 2, -3, 4, 0, 1};
  RationalVector acc(x.size(), 0);
  for (Index m = 1; m <= 5; ++m) {
    auto p = power_apply<Rational>(x, m);
    for (Index i = 0; i < x.size(); ++i) acc[i] += p[i];
  }
  for (auto& a : acc) a /= 5;
  EXPECT_EQ(cesaro_means<Rational>(x, 5), acc);
}

TEST(CesaroMeans, Dominated) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-1, 1);
  for (const char* name : {"n", "log_n", "sqrt_n", "loglog_n"}) {
    WeightFamily W(make_alpha(name));
    for (int t = 0; t < 5; ++t) {
      std::vector<Complex> x(30);
      for (auto& v : x) v = {u(rng), u(rng)};
      for (Index n : {1u, 10u, 100u}) {
        EXPECT_LE(log_weighted_norm(cesaro_means<Complex>(x, n), W, 1), log_weighted_norm(x, W, 1) + 1e-12);
      }
    }
  }
}

TEST(DecompositionSplit, Examples) {
  auto s = decomposition_split<Rational>(std::vector<Rational>{2, 5, 7});
  EXPECT_EQ(s.y, (std::vector<Rational>{2, 2, 2}));
  EXPECT_EQ(s.z, (std::vector<Rational>{0, 3, 5}));
  auto e2 = decomposition_split<Rational>(std::vector<Rational>{0, 1, 0});
  EXPECT_EQ(e2.y, (std::vector<Rational>{0, 0, 0}));
  auto again = decomposition_split<Rational>(s.y);
  EXPECT_EQ(again.y, s.y);
  EXPECT_EQ(again.z[0], 0);
}

TEST(PowerBounded, Presets) {
  for (const char* name : {"n", "log_n", "sqrt_n"}) {
    auto r = power_bounded_check(WeightFamily(make_alpha(name)), 1, 50, 200, 50);
    EXPECT_TRUE(r.passed) << name << " " << r.max_ratio;
  }
}

TEST(PowerBounded, FixedVectorAndE2) {
  WeightFamily W(make_alpha("n"));
  std::vector<Complex> ones(20, 1.0);
  double q = weighted_norm(ones, W, 1);
  std::vector<Complex> x = ones;
  std::vector<Complex> e2(20, 0.0);
  e2[1] = 1.0;
  double prev = weighted_norm(e2, W, 1);
  for (int m = 1; m <= 30; ++m) {
    x = cesaro_apply<Complex>(x);
    EXPECT_NEAR(weighted_norm(x, W, 1), q, 1e-15);
    e2 = cesaro_apply<Complex>(e2);
    double cur = weighted_norm(e2, W, 1);
    EXPECT_LE(cur, prev);
    prev = cur;
  }
}

TEST(IteratesLimit, E1ConvergesToOnes) {
  WeightFamily W(make_alpha("n"));
  std::vector<Complex> e1(10, 0.0);
  e1[0] = 1.0;
  auto t = iterates_limit_check(e1, W, 1, 1e-6);
  EXPECT_TRUE(t.converged);
  EXPECT_EQ(t.status, "converged");
  EXPECT_LT(t.distances.back(), 1e-6);
  for (const auto& v : t.limit) EXPECT_EQ(v, Complex(1.0));
  for (double d : t.distances) EXPECT_GE(d, 0.0);
  // Reproducible.
  auto u = iterates_limit_check(e1, W, 1, 1e-6);
  EXPECT_EQ(t.distances, u.distances);
}

TEST(IteratesLimit, FixedPointAndNotConverged) {
  WeightFamily W(make_alpha("n"));
  std::vector<Complex> ones(8, 1.0);
  auto t = iterates_limit_check(ones, W, 1);
  EXPECT_EQ(t.m_values.size(), 1u);
  EXPECT_EQ(t.distances[0], 0.0);
  std::vector<Complex> e2(8, 0.0);
  e2[1] = 1.0;
  auto c = iterates_limit_check(e2, W, 1, 1e-30, 5);
  EXPECT_FALSE(c.converged);
  EXPECT_EQ(c.status, "not_converged");
  EXPECT_EQ(c.m_values.size(), 5u);
  for (const auto& v : c.limit) EXPECT_EQ(v, Complex(0.0));
  EXPECT_THROW(iterates_limit_check(std::vector<Complex>{1.0}, W, 1), DomainError);
}

TEST(IteratesLimit, MeansFollowIterates) {
  WeightFamily W(make_alpha("n"));
  std::vector<Complex> x = {3.0, -1.0, 2.0, 0.5, 4.0, 1.0, 0.0, -2.0};
  auto t = iterates_limit_check(x, W, 1, 1e-12);
  ASSERT_TRUE(t.converged);
  std::vector<Complex> d(x.size());
  auto mean = cesaro_means<Complex>(x, 2000);
  for (Index i = 0; i < x.size(); ++i) d[i] = mean[i] - t.limit[i];
  EXPECT_LT(weighted_norm(d, W, 1), 1e-2);
}

TEST(IteratesLimit, RateShapeOnBasisVectors) {
  // q_1(C^m e_r)·(r-1) is non-increasing in m and tends to zero.
  WeightFamily W(make_alpha("n"));
  for (Index r : {2u, 3u, 5u}) {
    std::vector<Complex> x(50, 0.0);
    x[r - 1] = 1.0;
    double prev = kInf;
    for (int m = 1; m <= 500; ++m) {
      x = cesaro_apply<Complex>(x);
      double s = weighted_norm(x, W, 1) * double(r - 1);
      EXPECT_LE(s, prev * (1 + 1e-12));
      prev = s;
    }
    EXPECT_LT(prev, 1e-6);
  }
}

TEST(IteratesLimit, TraceCsv) {
  WeightFamily W(make_alpha("n"));
  std::vector<Complex> ones(4, 1.0);
  EXPECT_EQ(trace_to_csv(iterates_limit_check(ones, W, 1)), "m,distance\n1,0\n");
}

TEST(RangeInverse, EntriesAndExactInverse) {
  auto r = range_inverse_matrices(10);
  EXPECT_EQ(r.B(1, 1), Rational(2));
  EXPECT_EQ(r.B(2, 1), Rational(1));
  EXPECT_EQ(r.B(2, 2), Rational(3, 2));
  EXPECT_EQ(r.B(1, 2), Rational(0));
  EXPECT_EQ(r.residual_ab, 0.0);
  EXPECT_EQ(r.residual_ba, 0.0);
  auto one = range_inverse_matrices(1);
  EXPECT_EQ(one.A(1, 1) * one.B(1, 1), Rational(1));
}

TEST(RangeInverse, AIsShiftedIMinusC) {
  // A y = S (I - C) S_r y for exact random y.
  std::mt19937_64 rng(12);
  const Index N = 9;
  auto r = range_inverse_matrices(N);
  auto y = random_rational_vector(N, rng);
  auto x = shift_apply<Rational>(y);
  auto cx = cesaro_apply<Rational>(x);
  for (Index n = 1; n <= N; ++n) {
    Rational ay = 0;
    for (Index m = 1; m <= N; ++m) ay += r.A(n, m) * y[m - 1];
    EXPECT_EQ(ay, x[n] - cx[n]);
  }
}

TEST(BContinuity, NuclearPresets) {
  auto n = b_continuity_check(WeightFamily(make_alpha("n")), 1, 100000);
  EXPECT_EQ(n.status, Status::holds);
  // Majorant 2 + 2 a^{α_{n+1}} log(n+1) with a = s_1/s_2 = e^{-1}.
  double maj = 0.0;
  for (int m = 1; m <= 100000; ++m) maj = std::max(maj, 2 + 2 * std::exp(-(m + 1.0)) * std::log(m + 1.0));
  EXPECT_LE(n.sup_value, maj);
  EXPECT_EQ(b_continuity_check(WeightFamily(make_alpha("log_n")), 1, 100000).status, Status::holds);
}

TEST(BContinuity, NonNuclearDeclaredFails) {
  auto v = b_continuity_check(WeightFamily(make_alpha("loglog_n")), 1, 100000);
  EXPECT_EQ(v.status, Status::fails);
  EXPECT_TRUE(v.declared_override);
}
