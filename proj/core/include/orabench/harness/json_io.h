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

#ifndef ORABENCH_HARNESS_JSON_IO_H_
#define ORABENCH_HARNESS_JSON_IO_H_

#include <iosfwd>
#include <string>

#include "absl/status/statusor.h"
#include "orabench/augmentation/augmentation.h"
#include "orabench/byzantine/scenario.h"
#include "orabench/harness/experiment.h"
#include "orabench/pricing/exponential_pricing.h"
#include "orabench/types.h"

namespace orabench::harness {

// {"m", "budgets", "distributions": [[{"p", "decisions": [{"v", "a"}]}]]}.
// A menu whose first entry is not null gets the null decision prepended.
std::string InstanceToJson(const Instance& inst);
absl::StatusOr<Instance> InstanceFromJson(const std::string& text);

// {"opt_hat", "beta", "a_hat": [[...]]}.
std::string EstimatesToJson(const pricing::Estimates& est);
absl::StatusOr<pricing::Estimates> EstimatesFromJson(const std::string& text);

// Instance fields for the greens (one single-type distribution each) plus
// "n_green", "red": [{"t", "menu"}], "opt_hat", "beta".
std::string ScenarioToJson(const byzantine::ByzantineScenario& scenario);
absl::StatusOr<byzantine::ByzantineScenario> ScenarioFromJson(
    const std::string& text);

// [{"i", "k", "theta", "r"}].
std::string PlanToJson(const augment::AugmentationPlan& plan);
absl::StatusOr<augment::AugmentationPlan> PlanFromJson(const std::string& text);

// Run configuration; see README for the keys. Paths named by "instance",
// "scenario" and "plan" are resolved relative to `base_dir`.
absl::StatusOr<ExperimentConfig> ExperimentConfigFromJson(
    const std::string& text, const std::string& base_dir);

absl::StatusOr<genlab::GeneratorConfig> GeneratorConfigFromJson(
    const std::string& text);

// One JSON object per step: step, slot, prices, chosen, value, base_value,
// consumption, cumulative_consumption.
void WriteTraceJsonl(const Trace& trace, std::ostream& out);

absl::StatusOr<std::string> ReadFile(const std::string& path);
absl::Status WriteFile(const std::string& path, const std::string& content);

}  // namespace orabench::harness

#endif  // ORABENCH_HARNESS_JSON_IO_H_
