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

#include "orabench/lp/packing_lp.h"

#include <algorithm>
#include <cmath>

#include "absl/strings/str_cat.h"

namespace orabench::lp {
namespace {

void AppendVariable(PackingLP& lp, VariableKey key, const Decision& d,
                    int cap) {
  lp.variables.push_back(key);
  lp.objective.push_back(d.value);
  lp.consumption.insert(lp.consumption.end(), d.consumption.begin(),
                        d.consumption.end());
  lp.cap_row.push_back(cap);
}

}  // namespace

absl::StatusOr<PackingLP> BuildConfigurationLp(const Instance& inst,
                                               double budget_scale) {
  if (!(budget_scale > 0.0 && budget_scale <= 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("budget_scale must lie in (0, 1], got ", budget_scale));
  }
  PackingLP lp;
  lp.num_resources = inst.m;
  lp.num_requests = inst.n();
  lp.resource_rhs.reserve(inst.m);
  for (double b : inst.budgets) lp.resource_rhs.push_back(budget_scale * b);
  for (int i = 0; i < inst.n(); ++i) {
    const auto& types = inst.distributions[i].types;
    for (int k = 0; k < static_cast<int>(types.size()); ++k) {
      const int cap = lp.num_cap_rows();
      lp.cap_rhs.push_back(types[k].probability);
      for (const Decision& d : types[k].decisions) {
        AppendVariable(lp, {i, k, d.id}, d, cap);
      }
    }
  }
  return lp;
}

absl::StatusOr<PackingLP> BuildSampleLp(
    std::span<const RealizedRequest> requests, std::span<const double> budget) {
  if (requests.empty()) {
    return absl::InvalidArgumentError("sample LP needs at least one request");
  }
  for (size_t j = 0; j < budget.size(); ++j) {
    if (!(budget[j] > 0.0)) {
      return absl::InvalidArgumentError(
          absl::StrCat("sample LP budget[", j, "] = ", budget[j],
                       " is not positive"));
    }
  }
  PackingLP lp;
  lp.num_resources = static_cast<int>(budget.size());
  lp.num_requests = static_cast<int>(requests.size());
  lp.resource_rhs.assign(budget.begin(), budget.end());
  for (int i = 0; i < static_cast<int>(requests.size()); ++i) {
    const int cap = lp.num_cap_rows();
    lp.cap_rhs.push_back(1.0);
    for (const Decision& d : requests[i].decisions) {
      AppendVariable(lp, {i, 0, d.id}, d, cap);
    }
  }
  return lp;
}

double MaxViolation(const PackingLP& lp, std::span<const double> mass) {
  const int m = lp.num_resources;
  std::vector<double> used(m, 0.0);
  std::vector<double> capped(lp.num_cap_rows(), 0.0);
  double worst = 0.0;
  for (int v = 0; v < lp.num_variables(); ++v) {
    const double x = mass[v];
    worst = std::max({worst, -x, x - 1.0});
    capped[lp.cap_row[v]] += x;
    const auto a = lp.Consumption(v);
    for (int j = 0; j < m; ++j) used[j] += a[j] * x;
  }
  for (int j = 0; j < m; ++j) {
    worst = std::max(worst, used[j] - lp.resource_rhs[j]);
  }
  for (int c = 0; c < lp.num_cap_rows(); ++c) {
    worst = std::max(worst, capped[c] - lp.cap_rhs[c]);
  }
  return worst;
}

Matrix SolutionConsumption(const PackingLP& lp, const FractionalSolution& sol) {
  Matrix out(lp.num_requests, lp.num_resources);
  for (int v = 0; v < lp.num_variables(); ++v) {
    const double x = sol.mass[v];
    if (x == 0.0) continue;
    const auto a = lp.Consumption(v);
    auto row = out.row(lp.variables[v].request);
    for (int j = 0; j < lp.num_resources; ++j) row[j] += a[j] * x;
  }
  // Rounding can push a full unit a hair past 1.
  for (int i = 0; i < out.rows(); ++i) {
    for (double& e : out.row(i)) e = std::clamp(e, 0.0, 1.0);
  }
  return out;
}

}  // namespace orabench::lp
