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

#ifndef ORABENCH_LP_PACKING_LP_H_
#define ORABENCH_LP_PACKING_LP_H_

#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "orabench/types.h"

namespace orabench::lp {

// Variable x_{i,k,theta} of a configuration LP, or z_{i,theta} of a sample LP
// (type = 0 there).
struct VariableKey {
  int request = 0;
  int type = 0;
  int decision = 0;

  bool operator==(const VariableKey&) const = default;
};

// max <objective, x>
// s.t. sum_v consumption(v) x_v <= resource_rhs         (m resource rows)
//      sum_{v in cap row c} x_v <= cap_rhs[c]           (one row per (i,k))
//      0 <= x_v <= 1.
// Every variable belongs to exactly one cap row and every cap_rhs is <= 1, so
// the upper bounds are implied by the cap rows.
struct PackingLP {
  int num_resources = 0;
  int num_requests = 0;
  std::vector<VariableKey> variables;
  std::vector<double> objective;
  // variables.size() x num_resources, row-major.
  std::vector<double> consumption;
  std::vector<double> resource_rhs;
  std::vector<int> cap_row;
  std::vector<double> cap_rhs;

  int num_variables() const { return static_cast<int>(variables.size()); }
  int num_cap_rows() const { return static_cast<int>(cap_rhs.size()); }
  std::span<const double> Consumption(int v) const {
    return {consumption.data() + static_cast<size_t>(v) * num_resources,
            static_cast<size_t>(num_resources)};
  }
};

struct FractionalSolution {
  std::vector<double> mass;
  double objective = 0.0;
  // Optimal prices of the resource rows.
  std::vector<double> resource_duals;

  bool operator==(const FractionalSolution&) const = default;
};

// LP_UB over all (i, k, theta) with resource rows budget_scale * B and cap
// rows p_{i,k}. budget_scale must lie in (0, 1].
absl::StatusOr<PackingLP> BuildConfigurationLp(const Instance& inst,
                                               double budget_scale);

// LP_Sample over realized requests: cap 1 per request, resource rows
// `budget`.
absl::StatusOr<PackingLP> BuildSampleLp(
    std::span<const RealizedRequest> requests, std::span<const double> budget);

// Largest violation of any row or bound of `lp` by `mass` (0 when feasible).
double MaxViolation(const PackingLP& lp, std::span<const double> mass);

// Entry (i, j): expected consumption of resource j by request i under `sol`.
Matrix SolutionConsumption(const PackingLP& lp, const FractionalSolution& sol);

}  // namespace orabench::lp

#endif  // ORABENCH_LP_PACKING_LP_H_
