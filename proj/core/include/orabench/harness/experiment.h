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

#ifndef ORABENCH_HARNESS_EXPERIMENT_H_
#define ORABENCH_HARNESS_EXPERIMENT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "orabench/augmentation/augmentation.h"
#include "orabench/byzantine/scenario.h"
#include "orabench/genlab/generators.h"
#include "orabench/types.h"

namespace orabench::harness {

enum class Algorithm {
  kExpPricing,
  kSingleSample,
  kByzantine,
  kAugmented,
  kGreedyBaseline,
  kStaticPriceBaseline,
};

absl::StatusOr<Algorithm> ParseAlgorithm(const std::string& name);
std::string ToString(Algorithm a);

struct ExperimentConfig {
  Algorithm algorithm = Algorithm::kExpPricing;
  int trials = 1;
  uint64_t seed = 1;
  double epsilon = 0.25;
  // Part count D for single_sample; 0 picks min(n, 64).
  int partitions = 0;
  // "lp_ub" or "brute_force" for prophet algorithms. Byzantine runs always
  // use the green benchmark and report its kind.
  std::string benchmark = "lp_ub";
  // Source used when neither `instance` nor `scenario` is set.
  genlab::GeneratorConfig generator;
  std::optional<Instance> instance;
  std::optional<byzantine::ByzantineScenario> scenario;
  // Augmentation plan; generated from the generator preset when unset.
  std::optional<augment::AugmentationPlan> plan;
  // Worker cap; 0 reads ORABENCH_THREADS, then the hardware count.
  int threads = 0;
};

struct TrialRow {
  int trial = 0;
  uint64_t seed = 0;
  std::string algorithm;
  std::string family;
  // Smallest budget over resources.
  double budget = 0.0;
  double epsilon = 0.0;
  std::string benchmark_kind;
  double benchmark = 0.0;
  double total_value = 0.0;
  double base_value = 0.0;
  // total_value / benchmark; NaN when the benchmark is not positive.
  double ratio = 0.0;
  int stop_time = 0;
  bool terminated_early = false;
  // A Byzantine half hit its price threshold.
  bool be_event = false;
  // The slot schedule needed at least one green redraw.
  bool conflict = false;
  double max_utilization = 0.0;
  int guard_activations = 0;
  int red_allocations = 0;
  // "ok" or the error of this trial.
  std::string status = "ok";

  bool operator==(const TrialRow&) const = default;
};

struct Report {
  std::vector<TrialRow> rows;
};

// min(requested or ORABENCH_THREADS or hardware threads, work), at least 1.
int WorkerCount(int requested, int work);

// Runs cfg.trials independent trials. Trial t draws from seed
// DeriveSeed(cfg.seed, t); rows come back in trial order whatever the thread
// count.
absl::StatusOr<Report> RunExperiment(const ExperimentConfig& cfg);

struct TrialTrace {
  TrialRow row;
  Trace trace;
  std::vector<double> budgets;
};

// Re-runs a single trial of `cfg` and keeps its full trace.
absl::StatusOr<TrialTrace> RunTrialWithTrace(const ExperimentConfig& cfg,
                                             int trial);

}  // namespace orabench::harness

#endif  // ORABENCH_HARNESS_EXPERIMENT_H_
