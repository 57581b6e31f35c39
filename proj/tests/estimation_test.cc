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
#include <set>
#include <vector>

#include "gtest/gtest.h"
#include "orabench/estimation/estimators.h"
#include "orabench/estimation/partition.h"
#include "orabench/genlab/generators.h"
#include "orabench/lp/packing_lp.h"
#include "orabench/lp/packing_solver.h"
#include "orabench/random.h"
#include "support/builders.h"

namespace orabench::estimation {
namespace {

using ::orabench::testing::MenuOf;
using ::orabench::testing::Realize;
using ::orabench::testing::RequestOf;

std::vector<RealizedRequest> WithMaxima(const std::vector<double>& maxima) {
  std::vector<RealizedRequest> out;
  for (size_t i = 0; i < maxima.size(); ++i) {
    out.push_back(RequestOf(static_cast<int>(i),
                            MenuOf(1, {{maxima[i] / 2.0, {0.1}}, {maxima[i], {0.5}}})));
  }
  return out;
}

TEST(RandomPartitionTest, Sizes) {
  RandomStream rng(1);
  const Partition even = *RandomPartition(6, 3, rng);
  EXPECT_EQ(even.pad_count, 0);
  ASSERT_EQ(even.parts.size(), 3u);
  for (const auto& p : even.parts) EXPECT_EQ(p.size(), 2u);
  EXPECT_TRUE(ValidatePartition(even).ok());

  const Partition padded = *RandomPartition(5, 3, rng);
  EXPECT_EQ(padded.pad_count, 1);
  for (const auto& p : padded.parts) EXPECT_EQ(p.size(), 2u);
  EXPECT_TRUE(ValidatePartition(padded).ok());
}

TEST(RandomPartitionTest, RejectsBadCounts) {
  RandomStream rng(1);
  EXPECT_FALSE(RandomPartition(5, 0, rng).ok());
  EXPECT_FALSE(RandomPartition(0, 1, rng).ok());
}

TEST(RandomPartitionTest, ValidatorCatchesOverlap) {
  Partition bad;
  bad.n = 4;
  bad.parts = {{0, 1}, {1, 2}};
  EXPECT_FALSE(ValidatePartition(bad).ok());
  bad.parts = {{0, 1}, {2}};
  EXPECT_FALSE(ValidatePartition(bad).ok());
}

TEST(RandomPartitionTest, PairFrequency) {
  // Two fixed items share one of two size-3 parts with probability 2/5.
  RandomStream rng(99);
  const int draws = 10000;
  int together = 0;
  for (int s = 0; s < draws; ++s) {
    const Partition p = *RandomPartition(6, 2, rng);
    const std::set<int> first(p.parts[0].begin(), p.parts[0].end());
    if (first.count(0) == first.count(4)) ++together;
  }
  EXPECT_NEAR(static_cast<double>(together) / draws, 0.4, 0.02);
}

TEST(EstimateOptHatTest, Examples) {
  EXPECT_DOUBLE_EQ(*EstimateOptHat(WithMaxima({10, 8, 6, 4}), 1.0), 6.0);
  EXPECT_DOUBLE_EQ(*EstimateOptHat(WithMaxima({10, 8, 6, 4, 2, 1}), 0.5), 1.0);
  absl::StatusOr<double> small = EstimateOptHat(WithMaxima({10, 8, 6, 4, 2}), 0.5);
  ASSERT_FALSE(small.ok());
  EXPECT_EQ(small.status().code(), absl::StatusCode::kFailedPrecondition);
  EXPECT_NE(small.status().message().find("sample-too-small"), std::string::npos);
}

TEST(EstimateOptHatTest, RankRoundsUp) {
  EXPECT_EQ(OptHatRank(1.0), 3);
  EXPECT_EQ(OptHatRank(0.3), 10);
  EXPECT_EQ(OptHatRank(0.25), 12);
  EXPECT_EQ(OptHatRank(0.4), 8);
}

TEST(EstimateOptHatTest, CountPropertyAndAttainedValue) {
  RandomStream rng(5);
  for (int s = 0; s < 200; ++s) {
    std::vector<double> maxima(20);
    // Small integer range so ties are common.
    for (double& v : maxima) v = static_cast<double>(rng.NextBelow(6));
    const double eps = 0.2 + 0.3 * rng.NextUniform();
    const double opt = *EstimateOptHat(WithMaxima(maxima), eps);
    int at_least = 0;
    bool attained = false;
    for (double v : maxima) {
      at_least += v >= opt;
      attained |= v == opt;
    }
    EXPECT_GE(at_least, OptHatRank(eps));
    EXPECT_TRUE(attained);
  }
}

TEST(EstimatePrefixConsumptionsTest, NullSampleGivesZero) {
  std::vector<RealizedRequest> sample;
  for (int i = 0; i < 6; ++i) sample.push_back(RequestOf(i, MenuOf(2, {})));
  RandomStream rng(3);
  const Partition p = *RandomPartition(6, 3, rng);
  const std::vector<double> budgets = {2.0, 2.0};
  EXPECT_EQ(*EstimatePrefixConsumptions(sample, p, budgets, 0.5), Matrix(6, 2));
}

TEST(EstimatePrefixConsumptionsTest, SinglePartSingleRequest) {
  const std::vector<RealizedRequest> sample = {RequestOf(0, MenuOf(1, {{1.0, {1.0}}}))};
  RandomStream rng(3);
  const Partition p = *RandomPartition(1, 1, rng);
  const std::vector<double> budgets = {2.0};
  const Matrix a = *EstimatePrefixConsumptions(sample, p, budgets, 0.5);
  EXPECT_NEAR(a(0, 0), 1.0, 1e-9);
}

TEST(EstimatePrefixConsumptionsTest, PerPartBudgetDiscipline) {
  genlab::GeneratorConfig cfg;
  cfg.family = genlab::Family::kNonidentical;
  cfg.n = 90;
  cfg.m = 3;
  cfg.menu_size = 3;
  cfg.budget_rule = genlab::BudgetRule::kFixed;
  cfg.budget = 12.0;
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    cfg.seed = seed;
    const Instance inst = *genlab::GenProphetInstance(cfg);
    RandomStream rng(seed);
    const auto sample = SampleRealization(inst, rng);
    for (int D : {1, 4, 7}) {
      const Partition p = *RandomPartition(inst.n(), D, rng);
      const double eps = 0.25;
      const Matrix a = *EstimatePrefixConsumptions(sample, p, inst.budgets, eps);
      for (const auto& part : p.parts) {
        for (int j = 0; j < inst.m; ++j) {
          double used = 0.0;
          for (int i : part) {
            if (i < inst.n()) used += a(i, j);
          }
          EXPECT_LE(used, (1.0 - eps) / D * inst.budgets[j] + 1e-9);
        }
      }
      for (double x : a.data()) {
        EXPECT_GE(x, 0.0);
        EXPECT_LE(x, 1.0);
      }
    }
  }
}

TEST(EstimatePrefixConsumptionsTest, LooseBudgetMatchesFullLpPrefixes) {
  // With budgets that never bind every part keeps each request's best
  // decision, so the prefix sums agree with the whole-sample LP for every
  // partition.
  genlab::GeneratorConfig cfg;
  cfg.family = genlab::Family::kNonidentical;
  cfg.n = 12;
  cfg.m = 2;
  cfg.k_max = 1;
  cfg.budget_rule = genlab::BudgetRule::kFixed;
  cfg.budget = 1000.0;
  cfg.seed = 8;
  const Instance inst = *genlab::GenProphetInstance(cfg);
  const auto sample = Realize(inst);
  const double eps = 0.25;
  std::vector<double> scaled = inst.budgets;
  for (double& b : scaled) b *= 1.0 - eps;
  const lp::PackingLP full = *lp::BuildSampleLp(sample, scaled);
  const Matrix target = lp::SolutionConsumption(full, *lp::SolvePackingLp(full));

  RandomStream rng(11);
  const int draws = 2000;
  std::vector<double> sum(inst.n(), 0.0);
  std::vector<double> sq(inst.n(), 0.0);
  for (int s = 0; s < draws; ++s) {
    const Partition p = *RandomPartition(inst.n(), 2, rng);
    const Matrix a = *EstimatePrefixConsumptions(sample, p, inst.budgets, eps);
    double prefix = 0.0;
    for (int i = 0; i < inst.n(); ++i) {
      prefix += a(i, 0);
      sum[i] += prefix;
      sq[i] += prefix * prefix;
    }
  }
  double prefix_target = 0.0;
  for (int i = 0; i < inst.n(); ++i) {
    prefix_target += target(i, 0);
    const double mean = sum[i] / draws;
    const double var = std::max(0.0, sq[i] / draws - mean * mean);
    EXPECT_NEAR(mean, prefix_target, 3.0 * std::sqrt(var / draws) + 1e-7) << "prefix " << i;
  }
}

TEST(SingleSamplePipelineTest, NullSample) {
  std::vector<RealizedRequest> sample;
  for (int i = 0; i < 12; ++i) sample.push_back(RequestOf(i, MenuOf(1, {})));
  const std::vector<double> budgets = {5.0};
  RandomStream rng(2);
  const pricing::Estimates est = *SingleSamplePipeline(sample, budgets, 0.25, 4, rng);
  EXPECT_DOUBLE_EQ(est.opt_hat, 0.0);
  EXPECT_EQ(est.a_hat, Matrix(12, 1));
  EXPECT_DOUBLE_EQ(est.beta, 1.0);
}

TEST(SingleSamplePipelineTest, DeterministicInstanceMatchesPerPartLps) {
  genlab::GeneratorConfig cfg;
  cfg.family = genlab::Family::kNonidentical;
  cfg.n = 24;
  cfg.m = 2;
  cfg.k_max = 1;
  cfg.budget_rule = genlab::BudgetRule::kFixed;
  cfg.budget = 4.0;
  cfg.seed = 3;
  const Instance inst = *genlab::GenProphetInstance(cfg);
  const double eps = 0.25;
  const int D = 3;

  RandomStream run_rng(21);
  const auto sample = SampleRealization(inst, run_rng);
  EXPECT_EQ(sample[5].decisions, Realize(inst)[5].decisions);
  const pricing::Estimates est = *SingleSamplePipeline(sample, inst.budgets, eps, D, run_rng);

  RandomStream replay(21);
  (void)SampleRealization(inst, replay);
  const Partition p = *RandomPartition(inst.n(), D, replay);
  std::vector<double> part_budget = inst.budgets;
  for (double& b : part_budget) b *= (1.0 - eps) / D;
  for (const auto& part : p.parts) {
    std::vector<RealizedRequest> members;
    for (int i : part) members.push_back(Realize(inst)[i]);
    const lp::PackingLP lp = *lp::BuildSampleLp(members, part_budget);
    const Matrix local = lp::SolutionConsumption(lp, *lp::SolvePackingLp(lp));
    for (size_t r = 0; r < part.size(); ++r) {
      for (int j = 0; j < inst.m; ++j) {
        EXPECT_DOUBLE_EQ(est.a_hat(part[r], j), local(static_cast<int>(r), j));
      }
    }
  }
}

TEST(DefaultsTest, PartitionCounts) {
  EXPECT_EQ(DefaultPartitionCount(10), 10);
  EXPECT_EQ(DefaultPartitionCount(1000), 64);
  EXPECT_GT(TheoreticalPartitionCount(100, 2, 0.25), 1e6);
  EXPECT_NEAR(PartitionAccuracy(100, 2, 0.25, 64), std::sqrt(4.0 * std::log(800.0) / 64), 1e-12);
}

}  // namespace
}  // namespace orabench::estimation
