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

#include "orabench/byzantine/byzantine_pricing.h"

#include <cmath>

#include "absl/strings/str_cat.h"
#include "orabench/best_response.h"

namespace orabench::byzantine {

absl::StatusOr<ByzantineParams> ComputeByzantineParams(
    const ByzantineScenario& scenario, double epsilon) {
  if (!(epsilon > 0.0 && epsilon <= 0.5)) {
    return absl::InvalidArgumentError(
        absl::StrCat("epsilon must lie in (0, 1/2], got ", epsilon));
  }
  if (!(scenario.opt_hat >= 0.0) || !(scenario.beta >= 1.0) || scenario.m < 1) {
    return absl::InvalidArgumentError("scenario needs opt_hat >= 0, beta >= 1");
  }
  const double m = scenario.m;
  ByzantineParams p;
  p.epsilon = epsilon;
  p.lambda_init = std::pow(epsilon, 5) * scenario.opt_hat / std::pow(m, 4);
  p.log_threshold = 8.0 * std::log(m * scenario.beta / epsilon);
  p.price_cap = p.lambda_init * std::exp(p.log_threshold);
  return p;
}

absl::StatusOr<ByzantineRun> RunByzantinePricing(
    const ByzantineScenario& scenario, const SlotSchedule& schedule,
    double epsilon) {
  if (absl::Status s = ValidateScenario(scenario); !s.ok()) return s;
  if (absl::Status s = ValidateSchedule(scenario, schedule); !s.ok()) return s;
  absl::StatusOr<ByzantineParams> params =
      ComputeByzantineParams(scenario, epsilon);
  if (!params.ok()) return params.status();

  const int m = scenario.m;
  const double T = static_cast<double>(schedule.T);
  const int64_t half_end = schedule.T / 2;
  std::vector<double> pace(m);
  for (int j = 0; j < m; ++j) {
    pace[j] = (1.0 - epsilon) * scenario.budgets[j] / T;
  }

  ByzantineRun run;
  run.params = *params;
  run.half_consumption = {std::vector<double>(m, 0.0),
                          std::vector<double>(m, 0.0)};
  std::vector<double> total(m, 0.0);
  Trace& trace = run.trace;
  std::vector<double> frozen;
  for (const SlotEntry& entry : schedule.occupied) {
    const int h = entry.slot <= half_end ? 0 : 1;
    const int64_t t = h == 0 ? entry.slot : entry.slot - half_end;
    std::vector<double>& used = run.half_consumption[h];
    const Menu& menu = entry.kind == SlotKind::kGreen
                           ? scenario.green[entry.index]
                           : scenario.red[entry.index].menu;

    StepRecord rec;
    rec.step = static_cast<int>(trace.steps.size());
    rec.slot = entry.slot;
    int idx = 0;
    if (run.half_broken[h]) {
      rec.prices = frozen;
    } else {
      rec.prices.resize(m);
      for (int j = 0; j < m; ++j) {
        rec.prices[j] = params->lambda_init *
                        std::exp(epsilon * (used[j] - (t - 1) * pace[j]));
      }
      idx = BestResponseIndex(menu, rec.prices);
      for (int j = 0; j < m; ++j) {
        if (total[j] + menu[idx].consumption[j] >
            scenario.budgets[j] + kFeasibilityTolerance) {
          idx = 0;
          ++trace.guard_activations;
          break;
        }
      }
    }
    const Decision& d = menu[idx];
    rec.chosen = d.id;
    rec.value = d.value;
    rec.base_value = d.value;
    rec.consumption = d.consumption;
    for (int j = 0; j < m; ++j) {
      used[j] += d.consumption[j];
      total[j] += d.consumption[j];
    }
    rec.cumulative_consumption = total;
    if (entry.kind == SlotKind::kRed && idx != 0) ++run.red_allocations;
    trace.total_value += rec.value;
    trace.base_total_value += rec.base_value;

    if (!run.half_broken[h]) {
      for (int j = 0; j < m; ++j) {
        if (epsilon * (used[j] - t * pace[j]) > params->log_threshold) {
          run.half_broken[h] = true;
          run.break_slot[h] = entry.slot;
          break;
        }
      }
      if (run.half_broken[h]) {
        frozen.resize(m);
        for (int j = 0; j < m; ++j) {
          frozen[j] = params->lambda_init *
                      std::exp(epsilon * (used[j] - t * pace[j]));
        }
      }
    }
    trace.steps.push_back(std::move(rec));
  }
  trace.stop_time = static_cast<int>(trace.steps.size());
  trace.terminated_early = run.half_broken[0] || run.half_broken[1];
  return run;
}

}  // namespace orabench::byzantine
