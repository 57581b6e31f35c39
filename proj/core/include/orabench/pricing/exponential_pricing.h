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

#ifndef ORABENCH_PRICING_EXPONENTIAL_PRICING_H_
#define ORABENCH_PRICING_EXPONENTIAL_PRICING_H_

#include <functional>
#include <span>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "orabench/random.h"
#include "orabench/types.h"

namespace orabench::pricing {

// Estimate of the optimum plus per-step consumption estimates a_hat (n x m,
// entries in [0, 1]) and the quality parameter beta >= 1.
struct Estimates {
  double opt_hat = 0.0;
  Matrix a_hat;
  double beta = 1.0;
};

absl::Status ValidateEstimates(const Estimates& est, int n, int m);

struct PricingParams {
  double epsilon = 0.0;
  double lambda_init = 0.0;
  // Per-resource learning rate delta_j; all <= 1/2.
  std::vector<double> delta;
};

// ln(n m beta / eps), the log factor shared by every parameter formula.
double LogFactor(int n, int m, double beta, double epsilon);

// lambda_init = opt_hat * 4 L / (n m), delta_j = 8 L / (eps B_j) with
// L = LogFactor(n, m, beta, eps). Fails with FailedPrecondition
// ("budget-too-small") when some delta_j > 1/2.
absl::StatusOr<PricingParams> ComputeParameters(const Estimates& est, int n,
                                                int m,
                                                std::span<const double> budgets,
                                                double epsilon);

// lambda_j = lambda_init * exp(delta_j * (cum_alg_j - cum_hat_j)) where the
// cumulative sums run over the steps before the current one.
std::vector<double> PriceVector(std::span<const double> cum_alg,
                                std::span<const double> cum_hat,
                                const PricingParams& params);

// Per-decision additive value perturbation observed at a step; empty means
// none.
using ValueBonus = std::function<std::vector<double>(const RealizedRequest&)>;

// Runs the pricing loop on a fixed realization. After each step the run stops
// if for some j the algorithm's cumulative consumption reaches the estimated
// cumulative consumption plus eps B_j / 2; the triggering step's value is
// kept. A decision that would push any resource above B_j is replaced by the
// null decision and counted in guard_activations.
Trace RunPricingLoop(std::span<const RealizedRequest> requests,
                     std::span<const double> budgets, const Matrix& a_hat,
                     const PricingParams& params,
                     const ValueBonus& bonus = nullptr);

// Exponential Pricing with estimates on a fixed realization.
absl::StatusOr<Trace> RunExponentialPricingOn(
    std::span<const RealizedRequest> requests, std::span<const double> budgets,
    const Estimates& est, double epsilon);

// Draws gamma_1..gamma_n from `inst` with `rng`, then runs
// RunExponentialPricingOn.
absl::StatusOr<Trace> RunExponentialPricing(const Instance& inst,
                                            const Estimates& est,
                                            double epsilon, RandomStream& rng);

// Estimates for the known-distribution setting: a_hat is the per-step
// consumption of an optimal solution of LP_UB at (1 - eps) B, opt_hat is the
// LP_UB objective at full budget, beta = 1.
absl::StatusOr<Estimates> KnownDistributionEstimates(const Instance& inst,
                                                     double epsilon);

// Largest utilization sum_i a_ij / B_j over resources.
double MaxUtilization(const Trace& trace, std::span<const double> budgets);

}  // namespace orabench::pricing

#endif  // ORABENCH_PRICING_EXPONENTIAL_PRICING_H_
