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

#include "orabench/augmentation/augmentation.h"

#include <cmath>

#include "absl/strings/str_cat.h"

namespace orabench::augment {

void AugmentationPlan::Set(int i, int k, int theta, double r) {
  entries_[{i, k, theta}] = r;
}

double AugmentationPlan::Get(int i, int k, int theta) const {
  auto it = entries_.find({i, k, theta});
  return it == entries_.end() ? 0.0 : it->second;
}

std::vector<PlanEntry> AugmentationPlan::Entries() const {
  std::vector<PlanEntry> out;
  out.reserve(entries_.size());
  for (const auto& [key, r] : entries_) {
    out.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), r});
  }
  return out;
}

absl::Status ValidatePlan(const AugmentationPlan& plan) {
  for (const PlanEntry& e : plan.Entries()) {
    if (!(e.r >= 0.0) || !std::isfinite(e.r)) {
      return absl::InvalidArgumentError(
          absl::StrCat("perturbation r(", e.i, ", ", e.k, ", ", e.theta,
                       ") = ", e.r, " is not a finite nonnegative number"));
    }
    if (e.i < 0 || e.k < 0 || e.theta < 0) {
      return absl::InvalidArgumentError("plan indices must be nonnegative");
    }
  }
  return absl::OkStatus();
}

std::vector<double> BonusFor(const RealizedRequest& req,
                             const AugmentationPlan& plan) {
  std::vector<double> bonus(req.decisions.size(), 0.0);
  if (plan.empty()) return bonus;
  for (size_t t = 0; t < bonus.size(); ++t) {
    bonus[t] = plan.Get(req.step, req.type_index, req.decisions[t].id);
  }
  return bonus;
}

absl::StatusOr<RealizedRequest> ApplyAugmentation(
    const RealizedRequest& req, const AugmentationPlan& plan) {
  if (absl::Status s = ValidatePlan(plan); !s.ok()) return s;
  RealizedRequest out = req;
  const std::vector<double> bonus = BonusFor(req, plan);
  for (size_t t = 0; t < bonus.size(); ++t) out.decisions[t].value += bonus[t];
  return out;
}

absl::StatusOr<Trace> RunAugmentedPricingOn(
    std::span<const RealizedRequest> requests, std::span<const double> budgets,
    const AugmentationPlan& plan, const pricing::Estimates& est,
    double epsilon) {
  const int n = static_cast<int>(requests.size());
  const int m = static_cast<int>(budgets.size());
  if (absl::Status s = ValidatePlan(plan); !s.ok()) return s;
  if (absl::Status s = pricing::ValidateEstimates(est, n, m); !s.ok()) return s;
  absl::StatusOr<pricing::PricingParams> params =
      pricing::ComputeParameters(est, n, m, budgets, epsilon);
  if (!params.ok()) return params.status();
  return pricing::RunPricingLoop(
      requests, budgets, est.a_hat, *params,
      [&plan](const RealizedRequest& req) { return BonusFor(req, plan); });
}

absl::StatusOr<Trace> RunAugmentedPricingWith(const Instance& inst,
                                              const AugmentationPlan& plan,
                                              const pricing::Estimates& est,
                                              double epsilon,
                                              RandomStream& rng) {
  const std::vector<RealizedRequest> requests = SampleRealization(inst, rng);
  return RunAugmentedPricingOn(requests, inst.budgets, plan, est, epsilon);
}

absl::StatusOr<Trace> RunAugmentedPricing(const Instance& inst,
                                          const AugmentationPlan& plan,
                                          double epsilon, RandomStream& rng) {
  absl::StatusOr<pricing::Estimates> est =
      pricing::KnownDistributionEstimates(inst, epsilon);
  if (!est.ok()) return est.status();
  return RunAugmentedPricingWith(inst, plan, *est, epsilon, rng);
}

}  // namespace orabench::augment
