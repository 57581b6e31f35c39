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

#ifndef ORABENCH_ESTIMATION_ESTIMATORS_H_
#define ORABENCH_ESTIMATION_ESTIMATORS_H_

#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "orabench/estimation/partition.h"
#include "orabench/pricing/exponential_pricing.h"
#include "orabench/random.h"
#include "orabench/types.h"

namespace orabench::estimation {

// Default part count min(n, 64).
int DefaultPartitionCount(int n);

// 1024 ln^3(n m / eps) / eps^4, the part count the asymptotic analysis asks
// for. Reported only; far too large for desk-scale runs.
double TheoreticalPartitionCount(int n, int m, double epsilon);

// sqrt(4 ln(n m / eps) / D), the prefix accuracy that D parts buy.
double PartitionAccuracy(int n, int m, double epsilon, int D);

// For every part S_d solves the sample LP over {sample_i : i in S_d} with
// budget (1 - eps) B / D and sets row i of the result to the consumption of
// request i under that part's optimal solution. Padding rows are dropped, so
// the result is n x m.
absl::StatusOr<Matrix> EstimatePrefixConsumptions(
    std::span<const RealizedRequest> sample, const Partition& partition,
    std::span<const double> budgets, double epsilon);

// ceil(3 / eps), with a 1e-9 allowance so 3 / 0.3 stays 10.
int OptHatRank(double epsilon);

// The OptHatRank(eps)-th largest per-request maximum value; ties are broken
// by request index. FailedPrecondition ("sample-too-small") when the sample
// has fewer requests than the rank.
absl::StatusOr<double> EstimateOptHat(std::span<const RealizedRequest> sample,
                                      double epsilon);

// Estimates{EstimateOptHat, EstimatePrefixConsumptions over
// RandomPartition(n, D), beta = 1}.
absl::StatusOr<pricing::Estimates> SingleSamplePipeline(
    std::span<const RealizedRequest> sample, std::span<const double> budgets,
    double epsilon, int D, RandomStream& rng);

// Draws one sample realization, learns estimates from it, then runs
// Exponential Pricing on a fresh realization.
absl::StatusOr<Trace> RunSingleSample(const Instance& inst, double epsilon,
                                      int D, RandomStream& rng);

}  // namespace orabench::estimation

#endif  // ORABENCH_ESTIMATION_ESTIMATORS_H_
