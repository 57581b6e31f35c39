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

#include "orabench/byzantine/scenario.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

#include "absl/strings/str_cat.h"
#include "orabench/lp/brute_force.h"
#include "orabench/lp/packing_lp.h"
#include "orabench/lp/packing_solver.h"
#include "orabench/validate.h"

namespace orabench::byzantine {
namespace {

std::vector<RealizedRequest> GreenRequests(const ByzantineScenario& scenario) {
  std::vector<RealizedRequest> out(scenario.green.size());
  for (size_t g = 0; g < out.size(); ++g) {
    out[g].step = static_cast<int>(g);
    out[g].decisions = scenario.green[g];
  }
  return out;
}

}  // namespace

absl::Status ValidateScenario(const ByzantineScenario& scenario) {
  if (scenario.m < 1 || static_cast<int>(scenario.budgets.size()) != scenario.m) {
    return absl::InvalidArgumentError("scenario needs m >= 1 and m budgets");
  }
  for (int j = 0; j < scenario.m; ++j) {
    if (!(scenario.budgets[j] > 0.0)) {
      return absl::InvalidArgumentError(
          absl::StrCat("budget[", j, "] is not positive"));
    }
  }
  if (!(scenario.opt_hat >= 0.0) || !(scenario.beta >= 1.0)) {
    return absl::InvalidArgumentError("scenario needs opt_hat >= 0, beta >= 1");
  }
  std::vector<Violation> violations;
  for (int g = 0; g < scenario.n_green(); ++g) {
    ValidateMenu(scenario.green[g], scenario.m, absl::StrCat("green[", g, "]"),
                 violations);
  }
  for (int r = 0; r < scenario.n_red(); ++r) {
    const double t = scenario.red[r].t;
    if (!(t >= 0.0 && t <= 1.0)) {
      return absl::InvalidArgumentError(
          absl::StrCat("red[", r, "] time ", t, " outside [0, 1]"));
    }
    ValidateMenu(scenario.red[r].menu, scenario.m, absl::StrCat("red[", r, "]"),
                 violations);
  }
  if (!violations.empty()) {
    return absl::InvalidArgumentError(absl::StrCat(
        violations.front().where, ": ", violations.front().message));
  }
  return absl::OkStatus();
}

int64_t SlotCount(int n_green, int n_red, double epsilon) {
  const double n = static_cast<double>(n_green) + n_red;
  return std::max<int64_t>(1, static_cast<int64_t>(std::ceil(n * n / epsilon)));
}

int64_t SlotOf(double t, int64_t T) {
  const auto slot = static_cast<int64_t>(std::ceil(t * static_cast<double>(T)));
  return std::clamp<int64_t>(slot, 1, T);
}

absl::StatusOr<SlotSchedule> Discretize(const ByzantineScenario& scenario,
                                        double epsilon, RandomStream& rng) {
  if (!(epsilon > 0.0 && epsilon <= 0.5)) {
    return absl::InvalidArgumentError(
        absl::StrCat("epsilon must lie in (0, 1/2], got ", epsilon));
  }
  return DiscretizeWithSlots(
      scenario, SlotCount(scenario.n_green(), scenario.n_red(), epsilon), rng);
}

absl::StatusOr<SlotSchedule> DiscretizeWithSlots(
    const ByzantineScenario& scenario, int64_t T, RandomStream& rng) {
  const int64_t requests =
      static_cast<int64_t>(scenario.n_green()) + scenario.n_red();
  if (T < std::max<int64_t>(1, requests)) {
    return absl::InvalidArgumentError(
        absl::StrCat("T = ", T, " cannot hold ", requests, " requests"));
  }
  SlotSchedule schedule;
  schedule.T = T;
  std::unordered_set<int64_t> taken;

  std::vector<int> red_order(scenario.n_red());
  std::iota(red_order.begin(), red_order.end(), 0);
  std::stable_sort(red_order.begin(), red_order.end(), [&](int a, int b) {
    return scenario.red[a].t < scenario.red[b].t;
  });
  for (int r : red_order) {
    const int64_t slot = SlotOf(scenario.red[r].t, T);
    if (!taken.insert(slot).second) {
      ++schedule.red_discarded;
      continue;
    }
    schedule.occupied.push_back({slot, SlotKind::kRed, r});
  }
  for (int g = 0; g < scenario.n_green(); ++g) {
    while (true) {
      const int64_t slot = SlotOf(rng.NextUniform(), T);
      if (taken.insert(slot).second) {
        schedule.occupied.push_back({slot, SlotKind::kGreen, g});
        break;
      }
      ++schedule.conflicts;
    }
  }
  std::sort(schedule.occupied.begin(), schedule.occupied.end(),
            [](const SlotEntry& a, const SlotEntry& b) { return a.slot < b.slot; });
  return schedule;
}

absl::Status ValidateSchedule(const ByzantineScenario& scenario,
                              const SlotSchedule& schedule) {
  std::vector<int> green_seen(scenario.n_green(), 0);
  std::vector<int> red_seen(scenario.n_red(), 0);
  int64_t last = 0;
  for (const SlotEntry& e : schedule.occupied) {
    if (e.slot <= last || e.slot > schedule.T) {
      return absl::InvalidArgumentError(
          absl::StrCat("slot ", e.slot, " out of order or range"));
    }
    last = e.slot;
    if (e.kind == SlotKind::kGreen) {
      if (e.index < 0 || e.index >= scenario.n_green()) {
        return absl::InvalidArgumentError("green index out of range");
      }
      ++green_seen[e.index];
    } else if (e.kind == SlotKind::kRed) {
      if (e.index < 0 || e.index >= scenario.n_red() || red_seen[e.index]++) {
        return absl::InvalidArgumentError("red index repeated or out of range");
      }
    } else {
      return absl::InvalidArgumentError("dummy slots must not be listed");
    }
  }
  for (int g = 0; g < scenario.n_green(); ++g) {
    if (green_seen[g] != 1) {
      return absl::InvalidArgumentError(
          absl::StrCat("green ", g, " appears ", green_seen[g], " times"));
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<double> GreenLpBound(const ByzantineScenario& scenario) {
  if (scenario.green.empty()) return 0.0;
  const std::vector<RealizedRequest> greens = GreenRequests(scenario);
  absl::StatusOr<lp::PackingLP> lp = lp::BuildSampleLp(greens, scenario.budgets);
  if (!lp.ok()) return lp.status();
  absl::StatusOr<lp::FractionalSolution> sol = lp::SolvePackingLp(*lp);
  if (!sol.ok()) return sol.status();
  return sol->objective;
}

absl::StatusOr<GreenBenchmark> EvaluateGreenBenchmark(
    const ByzantineScenario& scenario) {
  GreenBenchmark out;
  out.kind = "brute_force";
  if (scenario.green.empty()) return out;
  const std::vector<RealizedRequest> greens = GreenRequests(scenario);
  if (lp::BruteForceSearchSpace(greens) <= lp::kBruteForceLimit) {
    absl::StatusOr<lp::OfflineOptimum> opt =
        lp::BruteForceOfflineOpt(greens, scenario.budgets);
    if (opt.ok()) {
      out.value = opt->value;
      return out;
    }
    if (opt.status().code() != absl::StatusCode::kResourceExhausted) {
      return opt.status();
    }
  }
  absl::StatusOr<double> bound = GreenLpBound(scenario);
  if (!bound.ok()) return bound.status();
  out.value = *bound;
  out.kind = "lp_ub";
  return out;
}

}  // namespace orabench::byzantine
