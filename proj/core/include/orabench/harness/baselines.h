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

#ifndef ORABENCH_HARNESS_BASELINES_H_
#define ORABENCH_HARNESS_BASELINES_H_

#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "orabench/types.h"

namespace orabench::harness {

// Best response at constant prices with the hard budget guard; never stops
// early.
Trace RunFixedPrices(std::span<const RealizedRequest> requests,
                     std::span<const double> budgets,
                     std::span<const double> prices);

// Zero prices: every request takes its most valuable option while it fits.
Trace RunGreedy(std::span<const RealizedRequest> requests,
                std::span<const double> budgets);

// Optimal resource duals of LP_UB at (1 - eps) B.
absl::StatusOr<std::vector<double>> StaticPrices(const Instance& inst,
                                                 double epsilon);

}  // namespace orabench::harness

#endif  // ORABENCH_HARNESS_BASELINES_H_
