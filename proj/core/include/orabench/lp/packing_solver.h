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

#ifndef ORABENCH_LP_PACKING_SOLVER_H_
#define ORABENCH_LP_PACKING_SOLVER_H_

#include "absl/status/statusor.h"
#include "orabench/lp/dense_simplex.h"
#include "orabench/lp/packing_lp.h"
#include "orabench/types.h"

namespace orabench::lp {

// Solves a packing LP to optimality.
//
// The cap rows split the variables into blocks, each a scaled simplex
// {x >= 0, sum x <= cap}. The solver runs column generation on the m
// resource rows: every column is one vertex of the product of blocks (one
// decision or nothing per block), priced exactly by a per-block argmax against
// the master's resource duals, and the restricted master is solved with
// SolveDenseLp. The vertex set is finite, so the loop terminates at an exact
// optimum. Block ties go to the smallest variable index.
absl::StatusOr<FractionalSolution> SolvePackingLp(const PackingLP& lp);

// Solves the same LP as one dense simplex over all m + R rows. Intended for
// small LPs and cross-checks.
absl::StatusOr<FractionalSolution> SolvePackingLpDense(const PackingLP& lp);

// The dense form of `lp` (resource rows then cap rows).
DenseLp ToDenseLp(const PackingLP& lp);

// Objective of LP_UB at full budget; the denominator of reported ratios.
absl::StatusOr<double> LpUpperBound(const Instance& inst);

}  // namespace orabench::lp

#endif  // ORABENCH_LP_PACKING_SOLVER_H_
