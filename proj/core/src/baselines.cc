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

#include "orabench/harness/baselines.h"

#include <algorithm>

#include "orabench/best_response.h"
#include "orabench/lp/packing_lp.h"
#include "orabench/lp/packing_solver.h"

namespace orabench::harness {

Trace RunFixedPrices(std::span<const RealizedRequest> requests,
                     std::span<const double> budgets,
                     std::span<const double> prices) {
  const int m = static_cast<int>(budgets.size());
  std::vector<double> cum(m, 0.0);
  Trace trace;
  trace.steps.reserve(requests.size());
  for (int i = 0; i < static_cast<int>(requests.size()); ++i) {
    const Menu& menu = requests[i].decisions;
    int idx = BestResponseIndex(menu, prices);
    for (int j = 0; j < m; ++j) {
      if (cum[j] + menu[idx].consumption[j] > budgets[j] + kFeasibilityTolerance) {
        idx = 0;
        ++trace.guard_activations;
        break;
      }
    }
    const Decision& d = menu[idx];
    for (int j = 0; j < m; ++j) cum[j] += d.consumption[j];
    StepRecord rec;
    rec.step = i;
    rec.slot = i;
    rec.prices.assign(prices.begin(), prices.end());
    rec.chosen = d.id;
    rec.value = d.value;
    rec.base_value = d.value;
    rec.consumption = d.consumption;
    rec.cumulative_consumption = cum;
    trace.total_value += d.value;
    trace.base_total_value += d.value;
    trace.steps.push_back(std::move(rec));
  }
  trace.stop_time = static_cast<int>(requests.size());
  return trace;
}

Trace RunGreedy(std::span<const RealizedRequest> requests,
                std::span<const double> budgets) {
  const std::vector<double> zero(budgets.size(), 0.0);
  return RunFixedPrices(requests, budgets, zero);
}

absl::StatusOr<std::vector<double>> StaticPrices(const Instance& inst,
                                                 double epsilon) {
  absl::StatusOr<lp::PackingLP> lp =
      lp::BuildConfigurationLp(inst, 1.0 - epsilon);
  if (!lp.ok()) return lp.status();
  absl::StatusOr<lp::FractionalSolution> sol = lp::SolvePackingLp(*lp);
  if (!sol.ok()) return sol.status();
  std::vector<double> prices = sol->resource_duals;
  for (double& p : prices) p = std::max(p, 0.0);
  return prices;
}

}  // namespace orabench::harness
