#include <gtest/gtest.h>

#include "cesaro/finite_type.hpp"

using namespace cesaro;

TEST(FiniteCriterion, LogNp1BoundedForNextStep) {
  auto W = finite_log_np1();
  for (int k = 1; k <= 4; ++k) {
    auto v = ft_continuity_criterion(W, k, k + 1, 1000000);
    EXPECT_EQ(v.verdict.status, Status::holds) << k;
  }
}

TEST(FiniteCriterion, LogNp1ValuesMatchDirectSum) {
  auto W = finite_log_np1();
  auto vals = ft_criterion_log_values(W, 1, 2, 2000);
  double prefix = 0.0;
  for (Index n = 1; n <= 2000; ++n) {
    prefix += 1.0 / (n + 1.0);
    double direct = std::sqrt(n + 1.0) / n * prefix;
    EXPECT_NEAR(std::exp(vals[n - 1]), direct, 1e-12 * direct) << n;
  }
}

TEST(FiniteCriterion, LogNp1UnderMajorant) {
  auto vals = ft_criterion_log_values(finite_log_np1(), 1, 2, 1000000);
  for (Index n = 1; n <= vals.size(); ++n) {
    double x = std::log(n + 1.0);
    ASSERT_LE(std::exp(vals[n - 1]), 2.0 * (1.0 + x) / std::sqrt(n + 1.0) + 1e-12) << n;
  }
}

TEST(FiniteCriterion, LinearAlphaDoesNotAct) {
  auto W = finite_from_alpha(make_alpha("n"));
  for (int l : {1, 2, 8, 64}) EXPECT_EQ(ft_continuity_criterion(W, 1, l, 100000).verdict.status, Status::fails) << l;
}

TEST(FiniteCriterion, FastPresetsDoNotAct) {
  for (const char* name : {"n", "n_sq", "n_log_n"}) {
    auto r = ft_cesaro_acts(finite_from_alpha(make_alpha(name)), 100000, 64, 2);
    EXPECT_EQ(r.status, Status::fails) << name;
  }
}

TEST(FiniteCriterion, LogNp1Acts) {
  auto r = ft_cesaro_acts(finite_log_np1(), 100000, 64, 4);
  EXPECT_EQ(r.status, Status::holds);
  ASSERT_EQ(r.steps.size(), 4u);
  for (const auto& s : r.steps) {
    ASSERT_TRUE(s.l_found.has_value());
    EXPECT_EQ(*s.l_found, s.k + 1);
  }
}

TEST(FiniteCriterion, RejectsBadSteps) {
  auto W = finite_log_np1();
  EXPECT_THROW(ft_continuity_criterion(W, 2, 1, 100), DomainError);
  EXPECT_THROW(ft_continuity_criterion(W, 0, 1, 100), DomainError);
  EXPECT_THROW(finite_staircase(171), OverflowError);
}

TEST(Staircase, JValues) {
  EXPECT_EQ(staircase_j(1), 1);
  EXPECT_EQ(staircase_j(2), 4);
  EXPECT_EQ(staircase_j(3), 96);
  EXPECT_EQ(staircase_j(4), 7077888);
  mpz_class j = 1;
  for (int k = 1; k < 7; ++k) {
    mpz_class p;
    mpz_pow_ui(p.get_mpz_t(), j.get_mpz_t(), k);
    j = 2 * (k + 1) * p;
  }
  EXPECT_EQ(staircase_j(7), j);
  for (int k = 1; k <= 8; ++k) {
    long e = 0;
    double mant = mpz_get_d_2exp(&e, staircase_j(k).get_mpz_t());
    double oracle = std::log(mant) + static_cast<double>(e) * std::log(2.0);
    EXPECT_NEAR(staircase_log_j(k), oracle, 1e-12 * std::max(1.0, oracle)) << k;
  }
}

TEST(Staircase, AlphaValues) {
  auto a = make_alpha("staircase");
  EXPECT_NEAR(a.value(1), std::log(1.0 + 2.5), 1e-14);
  EXPECT_NEAR(a.value(96), std::log(2654208.0 + 3.0 - 1.0 / 97.0), 1e-14);
  EXPECT_NEAR(a.value(4), std::log(2.0 * 16.0 + 3.0 - 1.0 / 5.0), 1e-14);
  for (Index n = 1; n < 5000; ++n) EXPECT_LT(a.value(n), a.value(n + 1) + 1e-15) << n;
}

TEST(Staircase, LowerBound) {
  EXPECT_NEAR(staircase_lower_bound(4, 1), 64.0, 1e-12);
  EXPECT_NEAR(staircase_lower_bound(1, 1), 0.25, 1e-15);
  EXPECT_NEAR(staircase_lower_bound(1000, 1000), 0.25, 2e-3);
  EXPECT_GT(staircase_lower_bound(1000, 1000), 0.25);
  EXPECT_NEAR(staircase_log_lower_bound(9, 3), std::log(std::pow(9.0, 1.0 / 3) * 9.0 * 9.0 / 4.0), 1e-12);
}

TEST(Staircase, DivergenceIndexMonotone) {
  for (int l : {1, 2, 5, 64}) {
    int prev = 0;
    for (double T : {1.0, 10.0, 1e3, 1e6, 1e12}) {
      int k0 = staircase_divergence_index(l, T);
      EXPECT_GE(k0, prev);
      EXPECT_GT(staircase_lower_bound(k0, l), T);
      for (int k = k0; k < k0 + 20; ++k) EXPECT_GT(staircase_lower_bound(k, l), T);
      prev = k0;
    }
  }
}

TEST(Staircase, DoesNotAct) {
  auto r = ft_cesaro_acts(finite_staircase(), 100000, 64, 1);
  EXPECT_EQ(r.status, Status::fails);
  ASSERT_EQ(r.steps.size(), 1u);
  EXPECT_TRUE(r.steps[0].all_failed);
  EXPECT_GT(r.steps[0].last.log_witness_n, std::log(1e6));
}

TEST(GpNuclearity, Examples) {
  EXPECT_EQ(gp_nuclearity(finite_from_alpha(make_alpha("n")), 1, 2, 100000).status, Status::holds);
  EXPECT_EQ(gp_nuclearity(finite_log_np1(), 1, 2, 100000).status, Status::fails);
  EXPECT_EQ(gp_nuclearity(WeightFamily(make_alpha("n_sq")), 1, 2, 100000).status, Status::holds);
  EXPECT_THROW(gp_nuclearity(finite_log_np1(), 2, 2, 100), DomainError);
}
