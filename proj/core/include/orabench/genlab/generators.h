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

#ifndef ORABENCH_GENLAB_GENERATORS_H_
#define ORABENCH_GENLAB_GENERATORS_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "orabench/augmentation/augmentation.h"
#include "orabench/byzantine/scenario.h"
#include "orabench/random.h"
#include "orabench/types.h"

namespace orabench::genlab {

enum class Family {
  kIid,
  kNonidentical,
  // Cheap requests first, valuable ones later; greedy spends the budget on
  // the cheap ones.
  kDecoy,
  kHardLowerBound,
  kByzantine,
  kAugmentation,
};

enum class BudgetRule {
  kFixed,
  // ceil(32 ln(n m / eps) / eps^2).
  kPricing,
  // ceil(16 ln(n m / eps) / eps), the smallest budget the pricing parameters
  // accept.
  kMinimal,
  // ceil(20 ln(m / eps) / eps^2).
  kByzantine,
};

enum class RedPreset { kFrontLoaded, kValueDecoys, kBudgetBurners, kUniformRed };

enum class AugPreset { kZero, kUniformBoost, kMisleading, kSpike };

struct GeneratorConfig {
  Family family = Family::kNonidentical;
  int n = 100;
  int m = 2;
  BudgetRule budget_rule = BudgetRule::kPricing;
  // Used by kFixed.
  double budget = 10.0;
  // Applied after the rule's formula (ceil first, then multiply).
  double budget_multiplier = 1.0;
  double epsilon = 0.25;
  uint64_t seed = 1;

  int k_max = 1;
  // Non-null decisions per type.
  int menu_size = 2;
  double value_min = 1.0;
  double value_max = 10.0;
  // Probability that a consumption coordinate is nonzero.
  double sparsity = 0.5;

  // Hard instance.
  int z = 1;
  int hard_budget = 4;
  // Round sqrt(B / z) to the nearest integer instead of rejecting.
  bool round_group_sizes = false;

  // Byzantine.
  double red_fraction = 0.0;
  RedPreset red_preset = RedPreset::kUniformRed;

  // Augmentation.
  AugPreset aug_preset = AugPreset::kZero;
  double aug_strength = 1.0;
};

absl::StatusOr<Family> ParseFamily(std::string_view name);
absl::StatusOr<BudgetRule> ParseBudgetRule(std::string_view name);
absl::StatusOr<RedPreset> ParseRedPreset(std::string_view name);
absl::StatusOr<AugPreset> ParseAugPreset(std::string_view name);
std::string ToString(Family f);
std::string ToString(BudgetRule r);
std::string ToString(RedPreset p);
std::string ToString(AugPreset p);

absl::Status ValidateConfig(const GeneratorConfig& cfg);

// Budget per resource under the config's rule for n requests.
absl::StatusOr<double> BudgetFor(const GeneratorConfig& cfg, int n);

// Prophet families (iid, nonidentical, decoy, augmentation). Values carry a
// deterministic jitter of 1e-9 times a running decision counter.
absl::StatusOr<Instance> GenProphetInstance(const GeneratorConfig& cfg);

struct HardInstance {
  Instance instance;
  double epsilon = 0.0;
  // Buyers per l in groups 1, 2, 3.
  int group1 = 0;
  int group2 = 0;
  int group3 = 0;
};

// m = 2^z items with B copies each. For l = 1..z, bundle A_l holds the items
// whose l-th bit is 1 and B_l the rest. Group 1: sqrt(B/z) A_l buyers of value
// 2; group 2: 2B/z A_l buyers of value 1 or 3 with probability 1/2 each;
// group 3: B/z B_l buyers of value 4. Groups arrive in order 1, 2, 3 and, in
// each group, by ascending l. Non-integral group sizes are rejected unless
// `round_group_sizes` is set, in which case they round to the nearest integer.
absl::StatusOr<HardInstance> GenHardInstance(int z, int B,
                                             bool round_group_sizes = false);

// Greens are one realization of a nonidentical instance with n_G requests;
// reds follow the preset with times fixed before any green randomness.
// opt_hat is the green benchmark value and beta = 1.
absl::StatusOr<byzantine::ByzantineScenario> GenByzantineScenario(
    const GeneratorConfig& cfg);

absl::StatusOr<augment::AugmentationPlan> GenAugmentationPlan(
    const Instance& inst, AugPreset preset, double strength, RandomStream& rng);

}  // namespace orabench::genlab

#endif  // ORABENCH_GENLAB_GENERATORS_H_
