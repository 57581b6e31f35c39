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

#include "orabench/pricing/exponential_pricing.h"

#include <algorithm>
#include <cmath>

#include "absl/strings/str_cat.h"
#include "orabench/best_response.h"
#include "orabench/lp/packing_lp.h"
#include "orabench/lp/packing_solver.h"

namespace orabench::pricing {

absl::Status ValidateEstimates(const Estimates& est, int n, int m) {
  if (est.a_hat.rows() != n || est.a_hat.cols() != m) {
    return absl::InvalidArgumentError(
        absl::StrCat("a_hat is ", est.a_hat.rows(), "x", est.a_hat.cols(),
                     ", expected ", n, "x", m));
  }
  if (!(est.opt_hat >= 0.0) || !std::isfinite(est.opt_hat)) {
    return absl::InvalidArgumentError(
        absl::StrCat("opt_hat must be finite and >= 0, got ", est.opt_hat));
  }
  if (!(est.beta >= 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("beta must be >= 1, got ", est.beta));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      const double a = est.a_hat(i, j);
      if (!(a >= 0.0 && a <= 1.0)) {
        return absl::InvalidArgumentError(
            absl::StrCat("a_hat[", i, "][", j, "] = ", a, " outside [0, 1]"));
      }
    }
  }
  return absl::OkStatus();
}

double LogFactor(int n, int m, double beta, double epsilon) {
  return std::log(static_cast<double>(n) * m * beta / epsilon);
}

absl::StatusOr<PricingParams> ComputeParameters(const Estimates& est, int n,
                                                int m,
                                                std::span<const double> budgets,
                                                double epsilon) {
  if (!(epsilon > 0.0 && epsilon <= 0.5)) {
    return absl::InvalidArgumentError(
        absl::StrCat("epsilon must lie in (0, 1/2], got ", epsilon));
  }
  if (n < 1 || m < 1 || static_cast<int>(budgets.size()) != m) {
    return absl::InvalidArgumentError("bad dimensions for pricing parameters");
  }
  if (!(est.beta >= 1.0) || !(est.opt_hat >= 0.0)) {
    return absl::InvalidArgumentError("estimates need opt_hat >= 0, beta >= 1");
  }
  const double log_factor = LogFactor(n, m, est.beta, epsilon);
  PricingParams params;
  params.epsilon = epsilon;
  params.lambda_init = est.opt_hat * 4.0 * log_factor / (n * m);
  params.delta.resize(m);
  for (int j = 0; j < m; ++j) {
    if (!(budgets[j] > 0.0)) {
      return absl::InvalidArgumentError(
          absl::StrCat("budget[", j, "] = ", budgets[j], " is not positive"));
    }
    params.delta[j] = 8.0 * log_factor / (epsilon * budgets[j]);
    if (params.delta[j] > 0.5) {
      return absl::FailedPreconditionError(absl::StrCat(
          "budget-too-small: delta[", j, "] = ", params.delta[j],
          " > 1/2 (B = ", budgets[j], ", epsilon = ", epsilon, ")"));
    }
  }
  return params;
}

std::vector<double> PriceVector(std::span<const double> cum_alg,
                                std::span<const double> cum_hat,
                                const PricingParams& params) {
  std::vector<double> prices(params.delta.size());
  for (size_t j = 0; j < prices.size(); ++j) {
    prices[j] = params.lambda_init *
                std::exp(params.delta[j] * (cum_alg[j] - cum_hat[j]));
  }
  return prices;
}

Trace RunPricingLoop(std::span<const RealizedRequest> requests,
                     std::span<const double> budgets, const Matrix& a_hat,
                     const PricingParams& params, const ValueBonus& bonus) {
  const int m = static_cast<int>(budgets.size());
  std::vector<double> cum_alg(m, 0.0);
  std::vector<double> cum_hat(m, 0.0);
  Trace trace;
  trace.steps.reserve(requests.size());
  for (int i = 0; i < static_cast<int>(requests.size()); ++i) {
    const RealizedRequest& req = requests[i];
    StepRecord rec;
    rec.step = i;
    rec.slot = i;
    rec.prices = PriceVector(cum_alg, cum_hat, params);
    std::vector<double> extra;
    if (bonus) extra = bonus(req);
    int idx = BestResponseIndex(req.decisions, rec.prices, extra);
    const Decision* d = &req.decisions[idx];
    for (int j = 0; j < m; ++j) {
      if (cum_alg[j] + d->consumption[j] > budgets[j] + kFeasibilityTolerance) {
        idx = 0;
        d = &req.decisions[0];
        ++trace.guard_activations;
        break;
      }
    }
    rec.chosen = d->id;
    rec.base_value = d->value;
    rec.value = d->value + (extra.empty() ? 0.0 : extra[idx]);
    rec.consumption = d->consumption;
    bool stop = false;
    for (int j = 0; j < m; ++j) {
      cum_alg[j] += d->consumption[j];
      cum_hat[j] += a_hat(i, j);
      if (cum_alg[j] >= cum_hat[j] + params.epsilon * budgets[j] / 2.0) {
        stop = true;
      }
    }
    rec.cumulative_consumption = cum_alg;
    trace.total_value += rec.value;
    trace.base_total_value += rec.base_value;
    trace.steps.push_back(std::move(rec));
    trace.stop_time = i + 1;
    if (stop) {
      trace.terminated_early = true;
      break;
    }
  }
  return trace;
}

absl::StatusOr<Trace> RunExponentialPricingOn(
    std::span<const RealizedRequest> requests, std::span<const double> budgets,
    const Estimates& est, double epsilon) {
  const int n = static_cast<int>(requests.size());
  const int m = static_cast<int>(budgets.size());
  if (absl::Status s = ValidateEstimates(est, n, m); !s.ok()) return s;
  absl::StatusOr<PricingParams> params =
      ComputeParameters(est, n, m, budgets, epsilon);
  if (!params.ok()) return params.status();
  return RunPricingLoop(requests, budgets, est.a_hat, *params);
}

absl::StatusOr<Trace> RunExponentialPricing(const Instance& inst,
                                            const Estimates& est,
                                            double epsilon, RandomStream& rng) {
  const std::vector<RealizedRequest> requests = SampleRealization(inst, rng);
  return RunExponentialPricingOn(requests, inst.budgets, est, epsilon);
}

absl::StatusOr<Estimates> KnownDistributionEstimates(const Instance& inst,
                                                     double epsilon) {
  if (!(epsilon > 0.0 && epsilon <= 0.5)) {
    return absl::InvalidArgumentError(
        absl::StrCat("epsilon must lie in (0, 1/2], got ", epsilon));
  }
  absl::StatusOr<lp::PackingLP> scaled =
      lp::BuildConfigurationLp(inst, 1.0 - epsilon);
  if (!scaled.ok()) return scaled.status();
  absl::StatusOr<lp::FractionalSolution> sol = lp::SolvePackingLp(*scaled);
  if (!sol.ok()) return sol.status();
  absl::StatusOr<double> upper = lp::LpUpperBound(inst);
  if (!upper.ok()) return upper.status();
  Estimates est;
  est.opt_hat = *upper;
  est.a_hat = lp::SolutionConsumption(*scaled, *sol);
  est.beta = 1.0;
  return est;
}

double MaxUtilization(const Trace& trace, std::span<const double> budgets) {
  if (trace.steps.empty()) return 0.0;
  const auto& cum = trace.steps.back().cumulative_consumption;
  double worst = 0.0;
  for (size_t j = 0; j < budgets.size(); ++j) {
    worst = std::max(worst, cum[j] / budgets[j]);
  }
  return worst;
}

}  // namespace orabench::pricing
