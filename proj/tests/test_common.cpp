#include <gtest/gtest.h>

#include <atomic>

#include "cesaro/common.hpp"

using namespace cesaro;

TEST(Fmt17, RoundTripsAndNonFinite) {
  EXPECT_EQ(fmt17(0.1), "0.10000000000000001");
  EXPECT_EQ(std::stod(fmt17(1.0 / 3.0)), 1.0 / 3.0);
  EXPECT_EQ(fmt17(kInf), "inf");
  EXPECT_EQ(fmt17(-kInf), "-inf");
  EXPECT_EQ(fmt17(std::nan("")), "nan");
}

TEST(LogAddExp, MatchesDirectSum) {
  EXPECT_NEAR(log_add_exp(std::log(2.0), std::log(3.0)), std::log(5.0), 1e-15);
  EXPECT_EQ(log_add_exp(-kInf, 1.5), 1.5);
  EXPECT_EQ(log_add_exp(1000.0, -kInf), 1000.0);
  EXPECT_NEAR(log_add_exp(1000.0, 1000.0), 1000.0 + std::log(2.0), 1e-12);
}

TEST(ScanTracker, TracksSupAndWitness) {
  ScanTracker s(5.0, Scale::plain);
  for (Index n = 1; n <= 10; ++n) s.add(static_cast<double>(n), n, n == 3 ? 7.0 : 1.0);
  EXPECT_EQ(s.sup_score(), 7.0);
  EXPECT_EQ(s.witness(), 3u);
  EXPECT_FALSE(s.grew(1e-12));
}

TEST(ScanTracker, GrowthInLastDecade) {
  ScanTracker s(9.0, Scale::log);
  for (Index n = 1; n <= 10; ++n) s.add(static_cast<double>(n), n, static_cast<double>(n));
  EXPECT_TRUE(s.grew(1e-12));
  EXPECT_NEAR(s.sup_value(), std::exp(10.0), 1e-9);
  EXPECT_EQ(s.log_sup(), 10.0);
}

TEST(ScanTracker, NanCountsAsInfinite) {
  ScanTracker s(0.5, Scale::plain);
  s.add(1.0, 1, std::nan(""));
  EXPECT_EQ(s.sup_score(), kInf);
}

TEST(DecisionRules, Boundedness) {
  DecisionRule rule;
  GrowthVerdict v;
  v.log_sup_value = 0.0;
  v.grew_last_decade = false;
  EXPECT_EQ(boundedness_rule(v, rule), Status::holds);
  v.grew_last_decade = true;
  EXPECT_EQ(boundedness_rule(v, rule), Status::inconclusive);
  v.log_sup_value = std::log(2e3);
  EXPECT_EQ(boundedness_rule(v, rule), Status::fails);
  v.grew_last_decade = false;
  EXPECT_EQ(boundedness_rule(v, rule), Status::inconclusive);
}

TEST(DecisionRules, DivergenceAndDeclared) {
  DecisionRule rule;
  GrowthVerdict v;
  v.log_sup_value = std::log(2e3);
  v.grew_last_decade = true;
  EXPECT_EQ(divergence_rule(v, rule), Status::fails);
  v.grew_last_decade = false;
  EXPECT_EQ(divergence_rule(v, rule), Status::inconclusive);
  apply_declared(v, TriState::yes, rule);
  EXPECT_EQ(v.status, Status::holds);
  EXPECT_TRUE(v.declared_override);
  apply_declared(v, TriState::no, rule);
  EXPECT_EQ(v.status, Status::fails);
}

TEST(ParallelFor, FillsEverySlotOnce) {
  std::vector<int> hits(1000, 0);
  parallel_for(hits.size(), 4, [&](Index i) { hits[i] += 1; });
  for (int h : hits) EXPECT_EQ(h, 1);
}

TEST(ParallelFor, PropagatesExceptions) {
  EXPECT_THROW(parallel_for(10, 3, [](Index i) {
                 if (i == 7) throw DomainError("boom");
               }),
               DomainError);
}
