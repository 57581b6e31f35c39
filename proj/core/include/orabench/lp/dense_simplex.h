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

#ifndef ORABENCH_LP_DENSE_SIMPLEX_H_
#define ORABENCH_LP_DENSE_SIMPLEX_H_

#include <vector>

#include "absl/status/statusor.h"

namespace orabench::lp {

// max c.x  s.t.  A x <= b, x >= 0, with b >= 0 so the origin is feasible.
struct DenseLp {
  int rows = 0;
  int cols = 0;
  std::vector<double> c;
  // rows x cols, row-major.
  std::vector<double> a;
  std::vector<double> b;

  double& A(int r, int col) { return a[static_cast<size_t>(r) * cols + col]; }
  double A(int r, int col) const {
    return a[static_cast<size_t>(r) * cols + col];
  }
};

struct DenseLpSolution {
  std::vector<double> x;
  std::vector<double> duals;
  double objective = 0.0;
  int iterations = 0;
};

// Revised simplex with an explicit dense basis inverse and Bland's rule.
// Deterministic. Fails with Internal ("numerical-failure") past
// 50 * (rows + cols) pivots and with InvalidArgument on a negative b.
absl::StatusOr<DenseLpSolution> SolveDenseLp(const DenseLp& lp);

}  // namespace orabench::lp

#endif  // ORABENCH_LP_DENSE_SIMPLEX_H_
