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

#include "orabench/harness/experiment.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <thread>

#include "absl/strings/str_cat.h"
#include "orabench/augmentation/augmentation.h"
#include "orabench/byzantine/byzantine_pricing.h"
#include "orabench/estimation/estimators.h"
#include "orabench/harness/baselines.h"
#include "orabench/lp/brute_force.h"
#include "orabench/lp/packing_solver.h"
#include "orabench/pricing/exponential_pricing.h"
#include "orabench/validate.h"

namespace orabench::harness {
namespace {

constexpr std::pair<const char*, Algorithm> kAlgorithms[] = {
    {"exp_pricing", Algorithm::kExpPricing},
    {"single_sample", Algorithm::kSingleSample},
    {"byzantine", Algorithm::kByzantine},
    {"augmented", Algorithm::kAugmented},
    {"greedy_baseline", Algorithm::kGreedyBaseline},
    {"static_price_baseline", Algorithm::kStaticPriceBaseline},
};

// Everything trials share, computed once up front.
struct Setup {
  std::string family;
  Instance instance;
  byzantine::ByzantineScenario scenario;
  std::vector<double> budgets;
  double lp_upper_bound = 0.0;
  byzantine::GreenBenchmark green;
  pricing::Estimates estimates;
  absl::Status estimates_status;
  std::vector<double> static_prices;
  augment::AugmentationPlan plan;
};

double MinBudget(const std::vector<double>& budgets) {
  return budgets.empty() ? 0.0
                         : *std::min_element(budgets.begin(), budgets.end());
}

absl::StatusOr<Setup> Prepare(const ExperimentConfig& cfg) {
  Setup s;
  const genlab::GeneratorConfig& gen = cfg.generator;
  if (cfg.algorithm == Algorithm::kByzantine) {
    if (cfg.instance.has_value()) {
      return absl::InvalidArgumentError(
          "byzantine runs need a scenario, not a prophet instance");
    }
    if (cfg.scenario.has_value()) {
      s.scenario = *cfg.scenario;
      s.family = "file";
    } else {
      absl::StatusOr<byzantine::ByzantineScenario> sc =
          genlab::GenByzantineScenario(gen);
      if (!sc.ok()) return sc.status();
      s.scenario = *std::move(sc);
      s.family = genlab::ToString(gen.family);
    }
    if (absl::Status st = byzantine::ValidateScenario(s.scenario); !st.ok()) {
      return st;
    }
    s.budgets = s.scenario.budgets;
    absl::StatusOr<byzantine::GreenBenchmark> bench =
        byzantine::EvaluateGreenBenchmark(s.scenario);
    if (!bench.ok()) return bench.status();
    s.green = *bench;
    return s;
  }

  if (cfg.scenario.has_value()) {
    return absl::InvalidArgumentError(absl::StrCat(
        ToString(cfg.algorithm), " runs need a prophet instance, not a scenario"));
  }
  if (cfg.instance.has_value()) {
    s.instance = *cfg.instance;
    s.family = "file";
  } else if (gen.family == genlab::Family::kHardLowerBound) {
    absl::StatusOr<genlab::HardInstance> hard =
        genlab::GenHardInstance(gen.z, gen.hard_budget, gen.round_group_sizes);
    if (!hard.ok()) return hard.status();
    s.instance = std::move(hard->instance);
    s.family = genlab::ToString(gen.family);
  } else if (gen.family == genlab::Family::kByzantine) {
    return absl::InvalidArgumentError(
        "the byzantine family only feeds the byzantine algorithm");
  } else {
    absl::StatusOr<Instance> inst = genlab::GenProphetInstance(gen);
    if (!inst.ok()) return inst.status();
    s.instance = *std::move(inst);
    s.family = genlab::ToString(gen.family);
  }
  if (absl::Status st = CheckInstance(s.instance); !st.ok()) return st;
  s.budgets = s.instance.budgets;

  if (cfg.benchmark == "lp_ub") {
    absl::StatusOr<double> ub = lp::LpUpperBound(s.instance);
    if (!ub.ok()) return ub.status();
    s.lp_upper_bound = *ub;
  }
  switch (cfg.algorithm) {
    case Algorithm::kExpPricing:
    case Algorithm::kAugmented: {
      absl::StatusOr<pricing::Estimates> est =
          pricing::KnownDistributionEstimates(s.instance, cfg.epsilon);
      if (est.ok()) {
        s.estimates = *std::move(est);
      } else {
        s.estimates_status = est.status();
      }
      break;
    }
    case Algorithm::kStaticPriceBaseline: {
      absl::StatusOr<std::vector<double>> prices =
          StaticPrices(s.instance, cfg.epsilon);
      if (!prices.ok()) return prices.status();
      s.static_prices = *std::move(prices);
      break;
    }
    default:
      break;
  }
  if (cfg.algorithm == Algorithm::kAugmented) {
    if (cfg.plan.has_value()) {
      s.plan = *cfg.plan;
    } else {
      RandomStream plan_rng(DeriveSeed(cfg.seed, 0x706c616eULL));
      absl::StatusOr<augment::AugmentationPlan> plan =
          genlab::GenAugmentationPlan(s.instance, gen.aug_preset,
                                      gen.aug_strength, plan_rng);
      if (!plan.ok()) return plan.status();
      s.plan = *std::move(plan);
    }
    if (absl::Status st = augment::ValidatePlan(s.plan); !st.ok()) return st;
  }
  return s;
}

void FillFromTrace(const Trace& trace, const std::vector<double>& budgets,
                   TrialRow& row) {
  row.total_value = trace.total_value;
  row.base_value = trace.base_total_value;
  row.stop_time = trace.stop_time;
  row.terminated_early = trace.terminated_early;
  row.max_utilization = pricing::MaxUtilization(trace, budgets);
  row.guard_activations = trace.guard_activations;
}

// Runs the prophet algorithm of `cfg` on one trial stream.
absl::StatusOr<Trace> RunProphetTrial(const ExperimentConfig& cfg,
                                      const Setup& s, RandomStream& rng,
                                      std::vector<RealizedRequest>& realized) {
  const Instance& inst = s.instance;
  switch (cfg.algorithm) {
    case Algorithm::kExpPricing:
      if (!s.estimates_status.ok()) return s.estimates_status;
      realized = SampleRealization(inst, rng);
      return pricing::RunExponentialPricingOn(realized, inst.budgets,
                                              s.estimates, cfg.epsilon);
    case Algorithm::kSingleSample: {
      const std::vector<RealizedRequest> sample = SampleRealization(inst, rng);
      const int d = cfg.partitions > 0
                        ? cfg.partitions
                        : estimation::DefaultPartitionCount(inst.n());
      absl::StatusOr<pricing::Estimates> est = estimation::SingleSamplePipeline(
          sample, inst.budgets, cfg.epsilon, d, rng);
      if (!est.ok()) return est.status();
      realized = SampleRealization(inst, rng);
      return pricing::RunExponentialPricingOn(realized, inst.budgets, *est,
                                              cfg.epsilon);
    }
    case Algorithm::kAugmented:
      if (!s.estimates_status.ok()) return s.estimates_status;
      realized = SampleRealization(inst, rng);
      return augment::RunAugmentedPricingOn(realized, inst.budgets, s.plan,
                                            s.estimates, cfg.epsilon);
    case Algorithm::kGreedyBaseline:
      realized = SampleRealization(inst, rng);
      return RunGreedy(realized, inst.budgets);
    case Algorithm::kStaticPriceBaseline:
      realized = SampleRealization(inst, rng);
      return RunFixedPrices(realized, inst.budgets, s.static_prices);
    case Algorithm::kByzantine:
      break;
  }
  return absl::InternalError("not a prophet algorithm");
}

absl::Status RunTrial(const ExperimentConfig& cfg, const Setup& s,
                      TrialRow& row, Trace* keep = nullptr) {
  RandomStream rng(row.seed);
  if (cfg.algorithm == Algorithm::kByzantine) {
    absl::StatusOr<byzantine::SlotSchedule> schedule =
        byzantine::Discretize(s.scenario, cfg.epsilon, rng);
    if (!schedule.ok()) return schedule.status();
    absl::StatusOr<byzantine::ByzantineRun> run =
        byzantine::RunByzantinePricing(s.scenario, *schedule, cfg.epsilon);
    if (!run.ok()) return run.status();
    FillFromTrace(run->trace, s.budgets, row);
    row.be_event = run->half_broken[0] || run->half_broken[1];
    row.conflict = schedule->had_conflict();
    row.red_allocations = run->red_allocations;
    row.benchmark_kind = s.green.kind;
    row.benchmark = s.green.value;
    if (keep != nullptr) *keep = std::move(run->trace);
    return absl::OkStatus();
  }
  std::vector<RealizedRequest> realized;
  absl::StatusOr<Trace> trace = RunProphetTrial(cfg, s, rng, realized);
  if (!trace.ok()) return trace.status();
  FillFromTrace(*trace, s.budgets, row);
  row.benchmark_kind = cfg.benchmark;
  if (cfg.benchmark == "lp_ub") {
    row.benchmark = s.lp_upper_bound;
  } else {
    absl::StatusOr<lp::OfflineOptimum> opt =
        lp::BruteForceOfflineOpt(realized, s.budgets);
    if (!opt.ok()) return opt.status();
    row.benchmark = opt->value;
  }
  if (keep != nullptr) *keep = *std::move(trace);
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<Algorithm> ParseAlgorithm(const std::string& name) {
  for (const auto& [key, value] : kAlgorithms) {
    if (name == key) return value;
  }
  return absl::InvalidArgumentError(
      absl::StrCat("unknown algorithm '", name, "'"));
}

std::string ToString(Algorithm a) {
  for (const auto& [key, value] : kAlgorithms) {
    if (value == a) return key;
  }
  return "unknown";
}

int WorkerCount(int requested, int work) {
  int cap = requested;
  if (cap <= 0) {
    if (const char* env = std::getenv("ORABENCH_THREADS")) {
      cap = std::atoi(env);
    }
  }
  if (cap <= 0) cap = static_cast<int>(std::thread::hardware_concurrency());
  return std::max(1, std::min(cap, work));
}

namespace {

absl::Status CheckConfig(const ExperimentConfig& cfg) {
  if (cfg.trials < 1) {
    return absl::InvalidArgumentError("trials must be at least 1");
  }
  if (!(cfg.epsilon > 0.0 && cfg.epsilon <= 0.5)) {
    return absl::InvalidArgumentError("epsilon must lie in (0, 1/2]");
  }
  if (cfg.benchmark != "lp_ub" && cfg.benchmark != "brute_force") {
    return absl::InvalidArgumentError(
        absl::StrCat("unknown benchmark '", cfg.benchmark, "'"));
  }
  return absl::OkStatus();
}

TrialRow RowHeader(const ExperimentConfig& cfg, const Setup& s, int t) {
  TrialRow row;
  row.trial = t;
  row.seed = DeriveSeed(cfg.seed, t);
  row.algorithm = ToString(cfg.algorithm);
  row.family = s.family;
  row.budget = MinBudget(s.budgets);
  row.epsilon = cfg.epsilon;
  return row;
}

void Finish(const absl::Status& st, TrialRow& row) {
  if (!st.ok()) {
    row.status = st.ToString();
    row.ratio = std::numeric_limits<double>::quiet_NaN();
    return;
  }
  row.ratio = row.benchmark > 0.0 ? row.total_value / row.benchmark
                                  : std::numeric_limits<double>::quiet_NaN();
}

}  // namespace

absl::StatusOr<Report> RunExperiment(const ExperimentConfig& cfg) {
  if (absl::Status st = CheckConfig(cfg); !st.ok()) return st;
  absl::StatusOr<Setup> setup = Prepare(cfg);
  if (!setup.ok()) return setup.status();

  Report report;
  report.rows.reserve(cfg.trials);
  for (int t = 0; t < cfg.trials; ++t) {
    report.rows.push_back(RowHeader(cfg, *setup, t));
  }
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int t = next++; t < cfg.trials; t = next++) {
      TrialRow& row = report.rows[t];
      Finish(RunTrial(cfg, *setup, row), row);
    }
  };
  const int workers = WorkerCount(cfg.threads, cfg.trials);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }
  return report;
}

absl::StatusOr<TrialTrace> RunTrialWithTrace(const ExperimentConfig& cfg,
                                             int trial) {
  if (absl::Status st = CheckConfig(cfg); !st.ok()) return st;
  if (trial < 0) return absl::InvalidArgumentError("trial must be >= 0");
  absl::StatusOr<Setup> setup = Prepare(cfg);
  if (!setup.ok()) return setup.status();
  TrialTrace out;
  out.row = RowHeader(cfg, *setup, trial);
  const absl::Status st = RunTrial(cfg, *setup, out.row, &out.trace);
  if (!st.ok()) return st;
  Finish(st, out.row);
  out.budgets = setup->budgets;
  return out;
}

}  // namespace orabench::harness
