#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "cesaro/weights.hpp"

using namespace cesaro;

TEST(AlphaPresets, DeclaredFlags) {
  auto npn = make_alpha("n_pow_n");
  EXPECT_EQ(npn.flags().nuclear, TriState::yes);
  EXPECT_EQ(npn.flags().shift_stable, TriState::no);
  auto ll = make_alpha("loglog_n");
  EXPECT_EQ(ll.flags().nuclear, TriState::no);
  EXPECT_EQ(ll.flags().shift_stable, TriState::yes);
  EXPECT_EQ(make_alpha("logloglog_n").flags().loglog_finite, TriState::no);
}

TEST(AlphaPresets, IdentityValue) { EXPECT_EQ(make_alpha("n").value(5), 5.0); }

TEST(AlphaPresets, UnknownNameThrows) { EXPECT_THROW(make_alpha("nope"), DomainError); }

TEST(AlphaPresets, StrictlyIncreasingUpTo1e4) {
  for (const auto& name : alpha_preset_names()) {
    auto a = make_alpha(name);
    Index h = a.finite_horizon(10001);
    auto v = a.range(1, h);
    for (Index n = 2; n < v.size(); ++n) {
      if (std::isfinite(v[n].value) && std::isfinite(v[n - 1].value) && v[n].value == v[n - 1].value) continue;
      // Staircase steps fall below double resolution; range() validates them analytically.
      if (name == "staircase") {
        EXPECT_GE(v[n].log_value, v[n - 1].log_value) << name << " at n=" << n + 1;
      } else {
        EXPECT_GT(v[n].log_value, v[n - 1].log_value) << name << " at n=" << n + 1;
      }
    }
    EXPECT_GT(v.front().value, 0.0) << name;
  }
}

TEST(AlphaPresets, NPowNKeepsLogBeyondOverflow) {
  auto a = make_alpha("n_pow_n");
  AlphaValue v = a.at(500);
  EXPECT_FALSE(std::isfinite(v.value));
  EXPECT_NEAR(v.log_value, 500.0 * std::log(500.0), 1e-9);
  EXPECT_LT(a.finite_horizon(1000), 200u);
}

TEST(AlphaSequence, RejectsNonMonotone) {
  EXPECT_THROW(AlphaSequence::from_values("bad", {1.0, 2.0, 2.0}), MonotonicityError);
  EXPECT_THROW(AlphaSequence::from_values("neg", {-1.0, 2.0}), DomainError);
  EXPECT_THROW(AlphaSequence::from_function("dec", [](Index n) { return 10.0 - n; }), MonotonicityError);
}

TEST(AlphaSequence, CsvRoundTrip) {
  std::string path = ::testing::TempDir() + "alpha.csv";
  {
    std::ofstream f(path);
    f << "n,alpha\n# comment\n1,1.5\n2,2.5\n3,4\n";
  }
  auto a = AlphaSequence::from_csv(path);
  EXPECT_EQ(a.length().value(), 3u);
  EXPECT_EQ(a.value(3), 4.0);
  EXPECT_THROW(a.at(4), DomainError);
  std::remove(path.c_str());
}

TEST(WeightFamily, LogWeightMatchesDefinition) {
  WeightFamily W(make_alpha("n"));
  EXPECT_NEAR(W.log_weight(2, 3), -6.0, 1e-15);
  WeightFamily V(make_alpha("n"), BaseSequence::shifted_linear());
  EXPECT_NEAR(V.weight(1, 3), std::pow(2.0, -3.0), 1e-15);
  // Decreasing in k and n.
  EXPECT_LT(W.log_weight(3, 4), W.log_weight(2, 4));
  EXPECT_LT(W.log_weight(2, 5), W.log_weight(2, 4));
}

TEST(WeightFamily, CustomBaseMustIncrease) {
  EXPECT_THROW(BaseSequence::custom("flat", [](int) { return 2.0; }), DomainError);
  EXPECT_NO_THROW(BaseSequence::custom("sq", [](int k) { return 1.0 + k * k; }));
}

TEST(CheckNuclear, LinearAlphaSupAtThree) {
  auto v = check_nuclear(make_alpha("n"), 100000);
  double oracle = 0.0;
  Index arg = 0;
  for (Index n = 2; n <= 100000; ++n) {
    double r = std::log(static_cast<double>(n)) / n;
    if (r > oracle) oracle = r, arg = n;
  }
  EXPECT_EQ(arg, 3u);
  EXPECT_NEAR(v.sup_value, oracle, 1e-14);
  EXPECT_EQ(v.witness_index, 3u);
  EXPECT_EQ(v.status, Status::holds);
}

TEST(CheckNuclear, LogNPlusOneBelowOne) {
  auto v = check_nuclear(make_alpha("log_n_plus_1"), 100000);
  EXPECT_LT(v.sup_value, 1.0);
  EXPECT_EQ(v.status, Status::holds);
}

TEST(CheckNuclear, LoglogLogFailsDeclared) {
  auto v = check_nuclear(make_alpha("logloglog_n"), 1000000);
  EXPECT_EQ(v.status, Status::fails);
  EXPECT_TRUE(v.declared_override);
}

TEST(CheckNuclear, UndeclaredDivergenceDetected) {
  auto a = AlphaSequence::from_function("sqrtlog", [](Index n) { return 1.0 + std::sqrt(std::log(n + 1.0)); });
  auto v = check_nuclear(a, 1000000);
  // log n / sqrt(log n) = sqrt(log n) stays far below the divergence threshold.
  EXPECT_EQ(v.status, Status::inconclusive);
  EXPECT_TRUE(v.grew_last_decade);
  auto b = AlphaSequence::from_function("tiny", [](Index n) { return 1e-6 * (1.0 + std::log(n + 1.0)); });
  // log n / α_n is near 10⁶ and still rising.
  EXPECT_EQ(check_nuclear(b, 100000).status, Status::fails);
}

TEST(CheckShiftStable, SqrtRatioAtOne) {
  auto v = check_shift_stable(make_alpha("sqrt_n"), 10000);
  EXPECT_NEAR(v.sup_value, std::sqrt(2.0), 1e-14);
  EXPECT_EQ(v.witness_index, 1u);
  EXPECT_EQ(v.status, Status::holds);
  auto w = check_shift_stable(make_alpha("n"), 10000);
  EXPECT_NEAR(w.sup_value, 2.0, 1e-14);
  EXPECT_EQ(check_shift_stable(make_alpha("n_pow_n"), 100).status, Status::fails);
}

TEST(CheckDeltaContinuity, Examples) {
  auto v = check_delta_continuity(make_alpha("n"), 10000);
  EXPECT_NEAR(v.sup_value, 1.0, 1e-15);
  EXPECT_EQ(v.status, Status::holds);
  EXPECT_EQ(check_delta_continuity(make_alpha("log_n"), 10000).status, Status::fails);
  EXPECT_EQ(check_delta_continuity(make_alpha("sqrt_n"), 10000).status, Status::fails);
}

TEST(CheckLoglog, Examples) {
  auto ll = check_loglog_bounded(make_alpha("loglog_n"), 100000);
  EXPECT_EQ(ll.status, Status::holds);
  EXPECT_LE(ll.sup_value, 1.0 + 1e-12);
  EXPECT_EQ(check_loglog_bounded(make_alpha("logloglog_n"), 100000).status, Status::fails);
  auto n = check_loglog_bounded(make_alpha("n"), 100000);
  EXPECT_EQ(n.status, Status::holds);
  EXPECT_LT(n.witness_index, 100u);
}

TEST(Predicates, DeltaImpliesNuclearOnPresets) {
  for (const auto& name : alpha_preset_names()) {
    auto a = make_alpha(name);
    Index h = std::max<Index>(3, a.finite_horizon(10000));
    if (check_delta_continuity(a, h).status == Status::holds) {
      EXPECT_NE(check_nuclear(a, h).status, Status::fails) << name;
    }
  }
}

TEST(PolynomialDomination, LinearGammaOne) {
  auto r = check_polynomial_domination(make_alpha("n"), 1.0, 100000);
  ASSERT_TRUE(r.M.has_value());
  EXPECT_EQ(*r.M, 1);
  EXPECT_NEAR(r.verdict.sup_value, std::exp(-1.0), 1e-15);
  EXPECT_EQ(r.verdict.witness_index, 1u);
}

TEST(PolynomialDomination, LogGammaTwo) {
  auto r = check_polynomial_domination(make_alpha("log_n"), 2.0, 100000);
  ASSERT_TRUE(r.M.has_value());
  EXPECT_EQ(*r.M, 2);
}

TEST(PolynomialDomination, LoglogHasNoM) {
  auto r = check_polynomial_domination(make_alpha("loglog_n"), 1.0, 1000000);
  EXPECT_FALSE(r.M.has_value());
  EXPECT_EQ(r.verdict.status, Status::fails);
}

TEST(PolynomialDomination, RoundTripFromNuclearBound) {
  for (const char* name : {"n", "n_sq", "log_n_plus_1", "sqrt_n"}) {
    auto a = make_alpha(name);
    double D = check_nuclear(a, 10000).sup_value;
    for (double gamma : {1.0, 2.0, 3.0}) {
      auto r = check_polynomial_domination(a, gamma, 10000);
      ASSERT_TRUE(r.M.has_value()) << name << " gamma " << gamma;
      EXPECT_LE(*r.M, static_cast<int>(std::ceil(gamma * D)) + 1) << name << " gamma " << gamma;
    }
  }
}
