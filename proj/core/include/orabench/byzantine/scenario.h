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

#ifndef ORABENCH_BYZANTINE_SCENARIO_H_
#define ORABENCH_BYZANTINE_SCENARIO_H_

#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "orabench/random.h"
#include "orabench/types.h"

namespace orabench::byzantine {

// An adversarial request with its continuous arrival time in [0, 1].
struct RedRequest {
  double t = 0.0;
  Menu menu;
};

struct ByzantineScenario {
  int m = 0;
  std::vector<double> budgets;
  // Green menus; their arrival times are uniform and drawn per schedule.
  std::vector<Menu> green;
  std::vector<RedRequest> red;
  // Optimum estimate with opt_hat in [Opt / beta, Opt].
  double opt_hat = 0.0;
  double beta = 1.0;

  int n_green() const { return static_cast<int>(green.size()); }
  int n_red() const { return static_cast<int>(red.size()); }
};

absl::Status ValidateScenario(const ByzantineScenario& scenario);

enum class SlotKind { kDummy, kGreen, kRed };

struct SlotEntry {
  // 1-based slot in [1, T].
  int64_t slot = 0;
  SlotKind kind = SlotKind::kDummy;
  // Index into ByzantineScenario::green or ::red.
  int index = 0;

  bool operator==(const SlotEntry&) const = default;
};

// Slots not listed in `occupied` hold dummy null-only requests.
struct SlotSchedule {
  int64_t T = 0;
  // Ascending by slot, at most one entry per slot.
  std::vector<SlotEntry> occupied;
  // Green draws that hit an occupied slot and were redrawn.
  int conflicts = 0;
  // Reds dropped because an earlier red held the same slot.
  int red_discarded = 0;

  bool had_conflict() const { return conflicts > 0; }
};

// ceil((n_green + n_red)^2 / eps), at least 1.
int64_t SlotCount(int n_green, int n_red, double epsilon);

// Slot ceil(t T) clamped to [1, T].
int64_t SlotOf(double t, int64_t T);

// Maps red times to slots keeping the first red per slot, then draws each
// green's time uniformly and redraws it while its slot is taken. Redraws are
// counted in `conflicts`.
absl::StatusOr<SlotSchedule> Discretize(const ByzantineScenario& scenario,
                                        double epsilon, RandomStream& rng);

// Same with an explicit slot count.
absl::StatusOr<SlotSchedule> DiscretizeWithSlots(
    const ByzantineScenario& scenario, int64_t T, RandomStream& rng);

// Checks ordering, slot range, that each green appears exactly once and that
// red entries are distinct.
absl::Status ValidateSchedule(const ByzantineScenario& scenario,
                              const SlotSchedule& schedule);

struct GreenBenchmark {
  double value = 0.0;
  // "brute_force" or "lp_ub".
  std::string kind;
};

// Exact green-only offline optimum when the brute-force guard allows it,
// otherwise the green-only LP relaxation.
absl::StatusOr<GreenBenchmark> EvaluateGreenBenchmark(
    const ByzantineScenario& scenario);

// Green-only LP relaxation regardless of size.
absl::StatusOr<double> GreenLpBound(const ByzantineScenario& scenario);

}  // namespace orabench::byzantine

#endif  // ORABENCH_BYZANTINE_SCENARIO_H_
