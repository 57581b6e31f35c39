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

#ifndef ORABENCH_LP_BRUTE_FORCE_H_
#define ORABENCH_LP_BRUTE_FORCE_H_

#include <cstdint>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "orabench/types.h"

namespace orabench::lp {

inline constexpr double kBruteForceLimit = 1e7;

struct OfflineOptimum {
  double value = 0.0;
  // Decision id per request.
  std::vector<int> assignment;
  // Search-space size after merging identical menus.
  double search_space = 0.0;
};

// Number of decision tuples the exhaustive search visits in the worst case.
// Requests with identical menus are interchangeable, so each class of c
// identical requests with d decisions contributes C(c + d - 1, d - 1)
// multisets instead of d^c tuples.
double BruteForceSearchSpace(std::span<const RealizedRequest> requests);

// Exact integer hindsight optimum of one realization: max sum of values over
// decision tuples whose total consumption fits in `budgets`. Fails with
// ResourceExhausted ("too-large") when BruteForceSearchSpace exceeds `limit`.
// Among optimal tuples the first one in search order is returned; inside a
// class of identical menus, decisions are handed out in ascending id order.
absl::StatusOr<OfflineOptimum> BruteForceOfflineOpt(
    std::span<const RealizedRequest> requests, std::span<const double> budgets,
    double limit = kBruteForceLimit);

}  // namespace orabench::lp

#endif  // ORABENCH_LP_BRUTE_FORCE_H_
