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

#ifndef ORABENCH_AUGMENTATION_AUGMENTATION_H_
#define ORABENCH_AUGMENTATION_AUGMENTATION_H_

#include <map>
#include <span>
#include <tuple>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "orabench/pricing/exponential_pricing.h"
#include "orabench/random.h"
#include "orabench/types.h"

namespace orabench::augment {

struct PlanEntry {
  int i = 0;
  int k = 0;
  int theta = 0;
  double r = 0.0;

  bool operator==(const PlanEntry&) const = default;
};

// Sparse perturbations r_{i,k}(theta); missing entries are 0.
class AugmentationPlan {
 public:
  AugmentationPlan() = default;

  // Later entries for the same key overwrite earlier ones.
  void Set(int i, int k, int theta, double r);
  double Get(int i, int k, int theta) const;

  bool empty() const { return entries_.empty(); }
  int size() const { return static_cast<int>(entries_.size()); }
  // Entries in (i, k, theta) order.
  std::vector<PlanEntry> Entries() const;

 private:
  std::map<std::tuple<int, int, int>, double> entries_;
};

// Rejects negative or non-finite perturbations.
absl::Status ValidatePlan(const AugmentationPlan& plan);

// Perturbation of each menu item of `req`.
std::vector<double> BonusFor(const RealizedRequest& req,
                             const AugmentationPlan& plan);

// Values become v + r; consumptions and ids are unchanged.
absl::StatusOr<RealizedRequest> ApplyAugmentation(const RealizedRequest& req,
                                                  const AugmentationPlan& plan);

// Exponential Pricing on a fixed realization where the argmax sees v + r.
// total_value holds the augmented gains and base_total_value the gains under
// v alone.
absl::StatusOr<Trace> RunAugmentedPricingOn(
    std::span<const RealizedRequest> requests, std::span<const double> budgets,
    const AugmentationPlan& plan, const pricing::Estimates& est,
    double epsilon);

// Exponential Pricing where the argmax sees v + r. total_value holds the
// augmented gains and base_total_value the gains under v alone. Estimates are
// supplied by the caller.
absl::StatusOr<Trace> RunAugmentedPricingWith(const Instance& inst,
                                              const AugmentationPlan& plan,
                                              const pricing::Estimates& est,
                                              double epsilon,
                                              RandomStream& rng);

// As above with pricing::KnownDistributionEstimates(inst, eps).
absl::StatusOr<Trace> RunAugmentedPricing(const Instance& inst,
                                          const AugmentationPlan& plan,
                                          double epsilon, RandomStream& rng);

}  // namespace orabench::augment

#endif  // ORABENCH_AUGMENTATION_AUGMENTATION_H_
