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

#include "orabench/estimation/estimators.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "absl/strings/str_cat.h"
#include "orabench/lp/packing_lp.h"
#include "orabench/lp/packing_solver.h"

namespace orabench::estimation {

int DefaultPartitionCount(int n) { return std::min(n, 64); }

double TheoreticalPartitionCount(int n, int m, double epsilon) {
  const double l = std::log(static_cast<double>(n) * m / epsilon);
  return 1024.0 * l * l * l / std::pow(epsilon, 4);
}

double PartitionAccuracy(int n, int m, double epsilon, int D) {
  return std::sqrt(4.0 * std::log(static_cast<double>(n) * m / epsilon) / D);
}

absl::StatusOr<Matrix> EstimatePrefixConsumptions(
    std::span<const RealizedRequest> sample, const Partition& partition,
    std::span<const double> budgets, double epsilon) {
  const int n = static_cast<int>(sample.size());
  const int m = static_cast<int>(budgets.size());
  if (partition.n != n) {
    return absl::InvalidArgumentError(
        absl::StrCat("partition covers ", partition.n, " requests, sample has ",
                     n));
  }
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("epsilon must lie in (0, 1), got ", epsilon));
  }
  const int D = static_cast<int>(partition.parts.size());
  std::vector<double> part_budget(m);
  for (int j = 0; j < m; ++j) part_budget[j] = (1.0 - epsilon) / D * budgets[j];

  Matrix a_hat(n, m);
  std::vector<RealizedRequest> members;
  std::vector<int> index;
  for (const auto& part : partition.parts) {
    members.clear();
    index.clear();
    for (int i : part) {
      // Padding requests are null-only and add nothing to the LP.
      if (i >= n) continue;
      members.push_back(sample[i]);
      index.push_back(i);
    }
    if (members.empty()) continue;
    absl::StatusOr<lp::PackingLP> lp = lp::BuildSampleLp(members, part_budget);
    if (!lp.ok()) return lp.status();
    absl::StatusOr<lp::FractionalSolution> sol = lp::SolvePackingLp(*lp);
    if (!sol.ok()) return sol.status();
    const Matrix local = lp::SolutionConsumption(*lp, *sol);
    for (size_t r = 0; r < index.size(); ++r) {
      for (int j = 0; j < m; ++j) a_hat(index[r], j) = local(r, j);
    }
  }
  return a_hat;
}

int OptHatRank(double epsilon) {
  return static_cast<int>(std::ceil(3.0 / epsilon - 1e-9));
}

absl::StatusOr<double> EstimateOptHat(std::span<const RealizedRequest> sample,
                                      double epsilon) {
  if (!(epsilon > 0.0)) {
    return absl::InvalidArgumentError("epsilon must be positive");
  }
  const int rank = OptHatRank(epsilon);
  const int n = static_cast<int>(sample.size());
  if (n < rank) {
    return absl::FailedPreconditionError(
        absl::StrCat("sample-too-small: ", n, " requests, rank ", rank,
                     " needed"));
  }
  std::vector<double> maxima(n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (const Decision& d : sample[i].decisions) {
      maxima[i] = std::max(maxima[i], d.value);
    }
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return maxima[a] > maxima[b]; });
  return maxima[order[rank - 1]];
}

absl::StatusOr<pricing::Estimates> SingleSamplePipeline(
    std::span<const RealizedRequest> sample, std::span<const double> budgets,
    double epsilon, int D, RandomStream& rng) {
  if (!(epsilon > 0.0 && epsilon <= 0.5)) {
    return absl::InvalidArgumentError(
        absl::StrCat("epsilon must lie in (0, 1/2], got ", epsilon));
  }
  absl::StatusOr<double> opt_hat = EstimateOptHat(sample, epsilon);
  if (!opt_hat.ok()) return opt_hat.status();
  absl::StatusOr<Partition> partition =
      RandomPartition(static_cast<int>(sample.size()), D, rng);
  if (!partition.ok()) return partition.status();
  absl::StatusOr<Matrix> a_hat =
      EstimatePrefixConsumptions(sample, *partition, budgets, epsilon);
  if (!a_hat.ok()) return a_hat.status();
  pricing::Estimates est;
  est.opt_hat = *opt_hat;
  est.a_hat = *std::move(a_hat);
  est.beta = 1.0;
  return est;
}

absl::StatusOr<Trace> RunSingleSample(const Instance& inst, double epsilon,
                                      int D, RandomStream& rng) {
  const std::vector<RealizedRequest> sample = SampleRealization(inst, rng);
  absl::StatusOr<pricing::Estimates> est =
      SingleSamplePipeline(sample, inst.budgets, epsilon, D, rng);
  if (!est.ok()) return est.status();
  return pricing::RunExponentialPricing(inst, *est, epsilon, rng);
}

}  // namespace orabench::estimation
