// Copyright 2026 The Orabench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "orabench/best_response.h"
#include "orabench/genlab/generators.h"
#include "orabench/pricing/certificates.h"
#include "orabench/pricing/exponential_pricing.h"
#include "orabench/random.h"
#include "support/builders.h"
#include "support/oracles.h"

namespace orabench::pricing {
namespace {

using ::orabench::testing::MenuOf;
using ::orabench::testing::RandomTinyRequests;
using ::orabench::testing::ReferencePricing;
using ::orabench::testing::ReferenceRun;
using ::orabench::testing::RequestOf;

Estimates EstimatesOf(double opt_hat, int n, int m) {
  Estimates est;
  est.opt_hat = opt_hat;
  est.a_hat = Matrix(n, m);
  return est;
}

TEST(ComputeParametersTest, Examples) {
  const std::vector<double> budgets = {160.0, 160.0};
  absl::StatusOr<PricingParams> p =
      ComputeParameters(EstimatesOf(100.0, 10, 2), 10, 2, budgets, 0.5);
  ASSERT_TRUE(p.ok()) << p.status();
  EXPECT_NEAR(p->lambda_init, 100.0 * 4.0 * std::log(40.0) / 20.0, 1e-12);
  EXPECT_NEAR(p->lambda_init, 73.778, 1e-3);
  EXPECT_NEAR(p->delta[0], 0.3689, 1e-4);
  EXPECT_LE(p->delta[1], 0.5);
}

TEST(ComputeParametersTest, SmallBudgetRejected) {
  const std::vector<double> budgets = {10.0};
  absl::StatusOr<PricingParams> p =
      ComputeParameters(EstimatesOf(1.0, 10, 1), 10, 1, budgets, 0.1);
  ASSERT_FALSE(p.ok());
  EXPECT_EQ(p.status().code(), absl::StatusCode::kFailedPrecondition);
  EXPECT_NE(p.status().message().find("budget-too-small"), std::string::npos);
}

TEST(ComputeParametersTest, RejectsBadEpsilon) {
  const std::vector<double> budgets = {1000.0};
  EXPECT_FALSE(ComputeParameters(EstimatesOf(1.0, 1, 1), 1, 1, budgets, 0.0).ok());
  EXPECT_FALSE(ComputeParameters(EstimatesOf(1.0, 1, 1), 1, 1, budgets, 0.6).ok());
}

TEST(PriceVectorTest, Examples) {
  PricingParams p{0.5, 3.0, {0.2, 0.4}};
  const std::vector<double> same = {1.5, 2.0};
  const std::vector<double> prices = PriceVector(same, same, p);
  EXPECT_EQ(prices, (std::vector<double>{3.0, 3.0}));

  PricingParams one{0.5, 1.0, {0.5}};
  const std::vector<double> alg = {2.0};
  const std::vector<double> zero = {0.0};
  EXPECT_NEAR(PriceVector(alg, zero, one)[0], std::exp(1.0), 1e-12);

  PricingParams two{0.5, 2.0, {0.1}};
  const std::vector<double> behind = {0.0};
  const std::vector<double> hat = {3.0};
  EXPECT_NEAR(PriceVector(behind, hat, two)[0], 1.48164, 1e-5);
}

// Desk calculation: lambda_init = 1, delta = 0.5, eps = 0.5, B = 4, a_hat = 0.5
// per step.
//   step 0: price 1, d1 utility 3 - 1 = 2 > 0, take. cum 1 vs hat 0.5.
//   step 1: price e^{0.25} = 1.2840, d1 utility 1 - 1.284 < 0, skip.
//   step 2: price e^0 = 1, d1 utility 2 - 0.5 = 1.5, take. cum 1.5 vs 1.5.
// No step reaches hat + eps B / 2 = hat + 1, so the run covers all 3 steps.
TEST(RunPricingLoopTest, GoldenThreeStepTrace) {
  const std::vector<RealizedRequest> reqs = {
      RequestOf(0, MenuOf(1, {{3.0, {1.0}}})),
      RequestOf(1, MenuOf(1, {{1.0, {1.0}}})),
      RequestOf(2, MenuOf(1, {{2.0, {0.5}}}))};
  const std::vector<double> budgets = {4.0};
  const Matrix a_hat(3, 1, 0.5);
  const PricingParams params{0.5, 1.0, {0.5}};
  const Trace t = RunPricingLoop(reqs, budgets, a_hat, params);

  ASSERT_EQ(t.steps.size(), 3u);
  EXPECT_DOUBLE_EQ(t.steps[0].prices[0], 1.0);
  EXPECT_NEAR(t.steps[1].prices[0], std::exp(0.25), 1e-15);
  EXPECT_DOUBLE_EQ(t.steps[2].prices[0], 1.0);
  EXPECT_EQ(t.steps[0].chosen, 1);
  EXPECT_EQ(t.steps[1].chosen, 0);
  EXPECT_EQ(t.steps[2].chosen, 1);
  EXPECT_DOUBLE_EQ(t.steps[2].cumulative_consumption[0], 1.5);
  EXPECT_DOUBLE_EQ(t.total_value, 5.0);
  EXPECT_EQ(t.stop_time, 3);
  EXPECT_FALSE(t.terminated_early);
  EXPECT_EQ(t.guard_activations, 0);

  const ReferenceRun ref = ReferencePricing(reqs, budgets, a_hat, 1.0, params.delta, 0.5);
  EXPECT_EQ(ref.chosen, (std::vector<int>{1, 0, 1}));
  EXPECT_DOUBLE_EQ(ref.total_value, 5.0);
}

// Same menus with a_hat = 0: step 0 already reaches 0 + eps B / 2 = 1.
TEST(RunPricingLoopTest, TerminatingStepKeepsItsValue) {
  const std::vector<RealizedRequest> reqs = {
      RequestOf(0, MenuOf(1, {{3.0, {1.0}}})),
      RequestOf(1, MenuOf(1, {{1.0, {1.0}}}))};
  const std::vector<double> budgets = {4.0};
  const Trace t = RunPricingLoop(reqs, budgets, Matrix(2, 1), PricingParams{0.5, 1.0, {0.5}});
  EXPECT_EQ(t.stop_time, 1);
  EXPECT_TRUE(t.terminated_early);
  EXPECT_DOUBLE_EQ(t.total_value, 3.0);
  EXPECT_EQ(t.steps.size(), 1u);
}

TEST(RunPricingLoopTest, GuardReplacesOverBudgetDecision) {
  const std::vector<RealizedRequest> reqs = {
      RequestOf(0, MenuOf(1, {{3.0, {1.0}}})),
      RequestOf(1, MenuOf(1, {{3.0, {1.0}}}))};
  const std::vector<double> budgets = {1.5};
  // A huge a_hat keeps the run going, tiny prices keep d1 attractive.
  const Trace t =
      RunPricingLoop(reqs, budgets, Matrix(2, 1, 1.0), PricingParams{0.5, 1e-6, {0.1}});
  EXPECT_EQ(t.steps[1].chosen, 0);
  EXPECT_EQ(t.guard_activations, 1);
}

TEST(RunExponentialPricingTest, ZeroValuesNeverTerminate) {
  std::vector<RealizedRequest> reqs;
  for (int i = 0; i < 20; ++i) reqs.push_back(RequestOf(i, MenuOf(1, {{0.0, {0.5}}})));
  const std::vector<double> budgets = {200.0};
  absl::StatusOr<Trace> t = RunExponentialPricingOn(reqs, budgets, EstimatesOf(1.0, 20, 1), 0.5);
  ASSERT_TRUE(t.ok()) << t.status();
  EXPECT_DOUBLE_EQ(t->total_value, 0.0);
  EXPECT_FALSE(t->terminated_early);
  EXPECT_EQ(t->stop_time, 20);
}

TEST(RunExponentialPricingTest, SingleStepServed) {
  const std::vector<RealizedRequest> reqs = {RequestOf(0, MenuOf(1, {{10.0, {0.5}}}))};
  const std::vector<double> budgets = {30.0};
  absl::StatusOr<Trace> t = RunExponentialPricingOn(reqs, budgets, EstimatesOf(1.0, 1, 1), 0.5);
  ASSERT_TRUE(t.ok()) << t.status();
  EXPECT_EQ(t->steps[0].chosen, 1);
  EXPECT_DOUBLE_EQ(t->total_value, 10.0);
}

TEST(RunExponentialPricingTest, PropagatesParameterErrors) {
  const std::vector<RealizedRequest> reqs = {RequestOf(0, MenuOf(1, {{10.0, {0.5}}}))};
  const std::vector<double> budgets = {1.0};
  EXPECT_EQ(RunExponentialPricingOn(reqs, budgets, EstimatesOf(1.0, 1, 1), 0.5).status().code(),
            absl::StatusCode::kFailedPrecondition);
}

TEST(RunPricingLoopTest, MatchesReferenceImplementation) {
  for (int trial = 0; trial < 300; ++trial) {
    std::mt19937_64 gen(trial);
    const int n = 5 + static_cast<int>(gen() % 30);
    const int m = 1 + static_cast<int>(gen() % 3);
    const auto reqs = RandomTinyRequests(n, 3, m, trial);
    std::vector<double> budgets(m);
    for (double& b : budgets) b = 2.0 + static_cast<double>(gen() % 8);
    Matrix a_hat(n, m);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < m; ++j) a_hat(i, j) = unit(gen);
    PricingParams params;
    params.epsilon = 0.1 + 0.4 * unit(gen);
    params.lambda_init = 0.5 + 3.0 * unit(gen);
    for (int j = 0; j < m; ++j) params.delta.push_back(0.5 * unit(gen));
    const Trace t = RunPricingLoop(reqs, budgets, a_hat, params);
    const ReferenceRun ref =
        ReferencePricing(reqs, budgets, a_hat, params.lambda_init, params.delta, params.epsilon);
    std::vector<int> chosen;
    for (const StepRecord& s : t.steps) chosen.push_back(s.chosen);
    EXPECT_EQ(chosen, ref.chosen) << "trial " << trial;
    EXPECT_EQ(t.stop_time, ref.stop_time);
    EXPECT_EQ(t.terminated_early, ref.terminated_early);
    EXPECT_NEAR(t.total_value, ref.total_value, 1e-9);
  }
}

class PricingInvariantTest : public ::testing::TestWithParam<uint64_t> {};

TEST_P(PricingInvariantTest, TraceInvariants) {
  genlab::GeneratorConfig cfg;
  cfg.family = genlab::Family::kNonidentical;
  cfg.n = 120;
  cfg.m = 3;
  cfg.k_max = 3;
  cfg.menu_size = 3;
  cfg.epsilon = 0.25;
  cfg.budget_rule = genlab::BudgetRule::kMinimal;
  cfg.budget_multiplier = 2.0;
  cfg.seed = GetParam();
  const Instance inst = *genlab::GenProphetInstance(cfg);
  const Estimates est = *KnownDistributionEstimates(inst, cfg.epsilon);
  absl::StatusOr<PricingParams> params =
      ComputeParameters(est, inst.n(), inst.m, inst.budgets, cfg.epsilon);
  if (!params.ok()) GTEST_SKIP() << params.status();

  RandomStream rng_a(GetParam());
  RandomStream rng_b(GetParam());
  const Trace t = *RunExponentialPricing(inst, est, cfg.epsilon, rng_a);
  EXPECT_EQ(t, *RunExponentialPricing(inst, est, cfg.epsilon, rng_b));
  EXPECT_EQ(t.guard_activations, 0);

  std::vector<double> cum_hat(inst.m, 0.0);
  for (size_t i = 0; i < t.steps.size(); ++i) {
    const StepRecord& s = t.steps[i];
    double utility = s.value;
    for (int j = 0; j < inst.m; ++j) utility -= s.prices[j] * s.consumption[j];
    EXPECT_GE(utility, 0.0);
    for (int j = 0; j < inst.m; ++j) {
      // Feasibility display: cum_alg(<= i) < cum_hat(< i) + eps B / 2 + 1.
      EXPECT_LT(s.cumulative_consumption[j],
                cum_hat[j] + cfg.epsilon * inst.budgets[j] / 2.0 + 1.0);
      EXPECT_LE(s.cumulative_consumption[j], inst.budgets[j]);
      cum_hat[j] += est.a_hat(static_cast<int>(i), j);
      if (i + 1 < t.steps.size()) {
        const double expected =
            s.prices[j] * std::exp(params->delta[j] *
                                   (s.consumption[j] - est.a_hat(static_cast<int>(i), j)));
        EXPECT_NEAR(t.steps[i + 1].prices[j] / expected, 1.0, 1e-12);
      }
    }
  }
  for (const InequalityCheck& c : CheckRevenueLossCertificate(t, est.a_hat, *params, cfg.epsilon)) {
    EXPECT_TRUE(c.holds) << c.lhs << " > " << c.rhs;
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, PricingInvariantTest, ::testing::Range<uint64_t>(1, 21));

TEST(NoRegretCertificateTest, ZeroRewards) {
  const std::vector<double> r(50, 0.0);
  const InequalityCheck c = *CheckNoRegretCertificate(r, 2.0, 0.25, 50);
  EXPECT_DOUBLE_EQ(c.lhs, 0.0);
  EXPECT_DOUBLE_EQ(c.rhs, -2.0 * 2.0 / 0.25);
  EXPECT_TRUE(c.holds);
}

TEST(NoRegretCertificateTest, PositiveRewards) {
  const std::vector<double> r(30, 1.0);
  const InequalityCheck c = *CheckNoRegretCertificate(r, 0.5, 0.1, 30);
  EXPECT_GT(c.lhs, 0.0);
  EXPECT_LT(c.rhs, 0.0);
  EXPECT_TRUE(c.holds);
}

TEST(NoRegretCertificateTest, RejectsBadInputs) {
  const std::vector<double> r = {0.5, -0.5};
  EXPECT_FALSE(CheckNoRegretCertificate(r, 1.0, 0.0, 2).ok());
  EXPECT_FALSE(CheckNoRegretCertificate(r, 1.0, 0.5, 2).ok());
  EXPECT_FALSE(CheckNoRegretCertificate(r, 0.0, 0.2, 2).ok());
  const std::vector<double> big = {1.5};
  EXPECT_FALSE(CheckNoRegretCertificate(big, 1.0, 0.2, 1).ok());
}

TEST(NoRegretCertificateTest, RandomSequencesHold) {
  std::mt19937_64 gen(2026);
  std::uniform_real_distribution<double> reward(-1.0, 1.0);
  std::uniform_real_distribution<double> rate(1e-3, 0.499);
  for (int s = 0; s < 1000; ++s) {
    std::vector<double> r(200);
    for (double& x : r) x = reward(gen);
    const double delta = rate(gen);
    const double slack = *NoRegretMinSlack(r, 1.0, delta);
    EXPECT_GE(slack, -kCertificateSlack);
    const int tau = static_cast<int>(gen() % 201);
    EXPECT_TRUE(CheckNoRegretCertificate(r, 1.0, delta, tau)->holds);
  }
}

TEST(NoRegretCertificateTest, MinSlackAgreesWithPrefixChecks) {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> reward(-1.0, 1.0);
  std::vector<double> r(40);
  for (double& x : r) x = reward(gen);
  double worst = 2.0 * 3.0 / 0.3;
  for (int tau = 1; tau <= 40; ++tau) {
    const InequalityCheck c = *CheckNoRegretCertificate(r, 3.0, 0.3, tau);
    worst = std::min(worst, c.lhs - c.rhs);
  }
  EXPECT_NEAR(*NoRegretMinSlack(r, 3.0, 0.3), worst, 1e-9);
}

TEST(RevenueLossCertificateTest, IdenticalSequences) {
  const std::vector<RealizedRequest> reqs = {
      RequestOf(0, MenuOf(1, {{3.0, {1.0}}})),
      RequestOf(1, MenuOf(1, {{1.0, {1.0}}})),
      RequestOf(2, MenuOf(1, {{2.0, {0.5}}}))};
  const std::vector<double> budgets = {4.0};
  const PricingParams params{0.5, 1.0, {0.5}};
  const Trace t = RunPricingLoop(reqs, budgets, Matrix(3, 1, 0.5), params);
  Matrix star(3, 1);
  for (const StepRecord& s : t.steps) star(s.step, 0) = s.consumption[0];
  const auto checks = CheckRevenueLossCertificate(t, star, params, 0.5);
  ASSERT_EQ(checks.size(), 1u);
  EXPECT_DOUBLE_EQ(checks[0].lhs, 0.0);
  EXPECT_TRUE(checks[0].holds);
}

TEST(RevenueLossCertificateTest, AllZero) {
  const std::vector<RealizedRequest> reqs = {RequestOf(0, MenuOf(1, {{0.0, {1.0}}}))};
  const std::vector<double> budgets = {4.0};
  const PricingParams params{0.5, 2.0, {0.25}};
  const Trace t = RunPricingLoop(reqs, budgets, Matrix(1, 1), params);
  const auto checks = CheckRevenueLossCertificate(t, Matrix(1, 1), params, 0.5);
  EXPECT_DOUBLE_EQ(checks[0].lhs, 0.0);
  EXPECT_DOUBLE_EQ(checks[0].rhs, 3.0 * 2.0 / 0.25);
  EXPECT_TRUE(checks[0].holds);
}

TEST(RevenueLossCertificateTest, DeterministicInstancesWithExactEstimates) {
  genlab::GeneratorConfig cfg;
  cfg.family = genlab::Family::kNonidentical;
  cfg.n = 60;
  cfg.m = 2;
  cfg.k_max = 1;
  cfg.epsilon = 0.25;
  cfg.budget_rule = genlab::BudgetRule::kMinimal;
  for (uint64_t seed = 1; seed <= 100; ++seed) {
    cfg.seed = seed;
    const Instance inst = *genlab::GenProphetInstance(cfg);
    const Estimates est = *KnownDistributionEstimates(inst, cfg.epsilon);
    absl::StatusOr<PricingParams> params =
        ComputeParameters(est, inst.n(), inst.m, inst.budgets, cfg.epsilon);
    ASSERT_TRUE(params.ok()) << params.status();
    RandomStream rng(seed);
    const Trace t = *RunExponentialPricing(inst, est, cfg.epsilon, rng);
    for (const InequalityCheck& c :
         CheckRevenueLossCertificate(t, est.a_hat, *params, cfg.epsilon)) {
      EXPECT_TRUE(c.holds) << "seed " << seed << ": " << c.lhs << " > " << c.rhs;
    }
  }
}

TEST(GoodEstimateToleranceTest, Formula) {
  EXPECT_NEAR(GoodEstimateTolerance(10, 2, 1.0, 0.5, 160.0),
              0.25 * 160.0 / (16.0 * std::log(40.0)), 1e-12);
  Matrix a(2, 1);
  Matrix b(2, 1);
  a(0, 0) = 1.0;
  b(1, 0) = 1.0;
  EXPECT_DOUBLE_EQ(MaxPrefixDeviation(a, b, 0), 1.0);
}

}  // namespace
}  // namespace orabench::pricing
