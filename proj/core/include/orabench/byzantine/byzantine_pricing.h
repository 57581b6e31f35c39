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

#ifndef ORABENCH_BYZANTINE_BYZANTINE_PRICING_H_
#define ORABENCH_BYZANTINE_BYZANTINE_PRICING_H_

#include <array>
#include <cstdint>
#include <vector>

#include "absl/status/statusor.h"
#include "orabench/byzantine/scenario.h"
#include "orabench/types.h"

namespace orabench::byzantine {

struct ByzantineParams {
  double epsilon = 0.0;
  // eps^5 * opt_hat / m^4.
  double lambda_init = 0.0;
  // 8 ln(m beta / eps); a half breaks once eps * (consumption - pace) exceeds
  // it, i.e. once a price would pass lambda_init * (m beta / eps)^8.
  double log_threshold = 0.0;
  double price_cap = 0.0;
};

absl::StatusOr<ByzantineParams> ComputeByzantineParams(
    const ByzantineScenario& scenario, double epsilon);

struct ByzantineRun {
  // One record per occupied slot; `slot` holds the slot index.
  Trace trace;
  ByzantineParams params;
  std::array<bool, 2> half_broken = {false, false};
  // Slot after whose step the half broke; 0 when it did not.
  std::array<int64_t, 2> break_slot = {0, 0};
  // Per-half consumption of each resource.
  std::array<std::vector<double>, 2> half_consumption;
  int red_allocations = 0;
};

// Two halves [1, T/2] and [T/2 + 1, T], each restarted at lambda_init with
// its own slot counter t:
//   lambda_{t,j} = lambda_init exp(eps (used_j - (t - 1)(1 - eps) B_j / T))
// where used_j is the half's consumption before slot t. Decisions are best
// responses. After a half breaks its remaining slots take the null decision.
// A global guard keeps total consumption within B and counts activations.
absl::StatusOr<ByzantineRun> RunByzantinePricing(
    const ByzantineScenario& scenario, const SlotSchedule& schedule,
    double epsilon);

}  // namespace orabench::byzantine

#endif  // ORABENCH_BYZANTINE_BYZANTINE_PRICING_H_
