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

// Runs the ten acceptance criteria and prints one PASS/FAIL line for each.
// Exit status is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "absl/strings/str_format.h"
#include "orabench/augmentation/augmentation.h"
#include "orabench/best_response.h"
#include "orabench/byzantine/byzantine_pricing.h"
#include "orabench/byzantine/scenario.h"
#include "orabench/estimation/estimators.h"
#include "orabench/estimation/partition.h"
#include "orabench/genlab/generators.h"
#include "orabench/harness/experiment.h"
#include "orabench/lp/brute_force.h"
#include "orabench/lp/packing_lp.h"
#include "orabench/lp/packing_solver.h"
#include "orabench/pricing/certificates.h"
#include "orabench/pricing/exponential_pricing.h"
#include "orabench/random.h"
#include "support/oracles.h"

namespace orabench::acceptance {
namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct MeanSe {
  double mean = 0.0;
  double se = 0.0;
};

MeanSe Stats(const std::vector<double>& xs) {
  MeanSe out;
  if (xs.empty()) return out;
  for (double x : xs) out.mean += x;
  out.mean /= xs.size();
  if (xs.size() < 2) return out;
  double ss = 0.0;
  for (double x : xs) ss += (x - out.mean) * (x - out.mean);
  out.se = std::sqrt(ss / (xs.size() - 1) / xs.size());
  return out;
}

// Standard error of a Bernoulli frequency.
double FrequencySe(double p, int n) { return std::sqrt(p * (1.0 - p) / n); }

// ---------------------------------------------------------------------------

// Greedy coordinate search for a reward sequence with small certificate slack.
std::vector<double> HillClimb(double lambda_init, double delta, RandomStream& rng) {
  std::vector<double> r(200);
  for (double& x : r) x = rng.NextUniform(-1.0, 1.0);
  double best = *pricing::NoRegretMinSlack(r, lambda_init, delta);
  for (int it = 0; it < 400; ++it) {
    const size_t i = rng.NextBelow(r.size());
    const double old = r[i];
    r[i] = rng.NextBernoulli(0.5) ? rng.NextUniform(-1.0, 1.0)
                                  : std::clamp(old + rng.NextUniform(-0.3, 0.3), -1.0, 1.0);
    const double slack = *pricing::NoRegretMinSlack(r, lambda_init, delta);
    if (slack < best) {
      best = slack;
    } else {
      r[i] = old;
    }
  }
  return r;
}

Outcome NoRegret() {
  const double lambdas[] = {0.01, 1.0, 100.0};
  RandomStream rng(1001);
  double worst = std::numeric_limits<double>::infinity();
  int violations = 0;
  for (int s = 0; s < 10000; ++s) {
    std::vector<double> r(200);
    for (double& x : r) x = rng.NextUniform(-1.0, 1.0);
    double delta = 0.0;
    while (delta <= 0.0) delta = 0.5 * rng.NextUniform();
    const double slack = *pricing::NoRegretMinSlack(r, lambdas[s % 3], delta);
    worst = std::min(worst, slack);
    violations += slack < -pricing::kCertificateSlack;
  }
  double worst_climbed = std::numeric_limits<double>::infinity();
  for (int s = 0; s < 100; ++s) {
    double delta = 0.0;
    while (delta <= 0.0) delta = 0.5 * rng.NextUniform();
    const double lambda = lambdas[s % 3];
    const std::vector<double> r = HillClimb(lambda, delta, rng);
    const double slack = *pricing::NoRegretMinSlack(r, lambda, delta);
    worst_climbed = std::min(worst_climbed, slack);
    violations += slack < -pricing::kCertificateSlack;
  }
  return {violations == 0,
          absl::StrFormat("violations=%d min_slack_random=%.3g min_slack_climbed=%.3g",
                          violations, worst, worst_climbed)};
}

Outcome BudgetFeasibility() {
  genlab::GeneratorConfig cfg;
  cfg.family = genlab::Family::kNonidentical;
  cfg.n = 500;
  cfg.m = 5;
  cfg.k_max = 1;
  cfg.epsilon = 0.25;
  cfg.budget_rule = genlab::BudgetRule::kPricing;
  int over = 0;
  int guards = 0;
  int failed = 0;
  double peak = 0.0;
  for (uint64_t seed = 1; seed <= 500; ++seed) {
    cfg.seed = seed;
    const Instance inst = *genlab::GenProphetInstance(cfg);
    absl::StatusOr<pricing::Estimates> est = pricing::KnownDistributionEstimates(inst, cfg.epsilon);
    if (!est.ok()) {
      ++failed;
      continue;
    }
    RandomStream rng(DeriveSeed(seed, 7));
    absl::StatusOr<Trace> t = pricing::RunExponentialPricing(inst, *est, cfg.epsilon, rng);
    if (!t.ok()) {
      ++failed;
      continue;
    }
    guards += t->guard_activations;
    if (t->steps.empty()) continue;
    const auto& used = t->steps.back().cumulative_consumption;
    for (int j = 0; j < inst.m; ++j) {
      over += used[j] > inst.budgets[j];
      peak = std::max(peak, used[j] / inst.budgets[j]);
    }
  }
  return {over == 0 && guards == 0 && failed == 0,
          absl::StrFormat("B=%.0f over_budget=%d guard_activations=%d errors=%d peak_util=%.3f",
                          *genlab::BudgetFor(cfg, cfg.n), over, guards, failed, peak)};
}

Outcome LpOracle() {
  int mismatches = 0;
  int not_dominating = 0;
  double worst = 0.0;
  for (int s = 0; s < 200; ++s) {
    RandomStream rng(DeriveSeed(3003, s));
    const int n = 1 + static_cast<int>(rng.NextBelow(4));
    const int menu = 1 + static_cast<int>(rng.NextBelow(3));
    const int m = 1 + static_cast<int>(rng.NextBelow(2));
    const auto reqs = testing::RandomTinyRequests(n, menu, m, rng.NextU64());
    std::vector<double> budgets(m);
    for (double& b : budgets) b = 1.0 + static_cast<double>(rng.NextBelow(3));
    const lp::PackingLP program = *lp::BuildSampleLp(reqs, budgets);
    absl::StatusOr<lp::FractionalSolution> sol = lp::SolvePackingLp(program);
    const double oracle = testing::VertexEnumerationOptimum(program);
    if (!sol.ok() || std::abs(sol->objective - oracle) > kObjectiveTolerance) {
      ++mismatches;
      continue;
    }
    worst = std::max(worst, std::abs(sol->objective - oracle));
    absl::StatusOr<lp::OfflineOptimum> integral = lp::BruteForceOfflineOpt(reqs, budgets);
    if (!integral.ok() || integral->value > sol->objective + kObjectiveTolerance) {
      ++not_dominating;
    }
  }
  return {mismatches == 0 && not_dominating == 0,
          absl::StrFormat("mismatches=%d not_dominating=%d max_abs_diff=%.2g", mismatches,
                          not_dominating, worst)};
}

// Random instance where every request has two equally likely types.
Instance TwoTypeInstance(int n, int m, double budget, RandomStream& rng) {
  Instance inst;
  inst.m = m;
  inst.budgets.assign(m, budget);
  for (int i = 0; i < n; ++i) {
    RequestDistribution dist;
    for (int k = 0; k < 2; ++k) {
      std::vector<DecisionSpec> specs;
      for (int d = 0; d < 2; ++d) {
        DecisionSpec spec;
        spec.value = rng.NextUniform(1.0, 10.0);
        for (int j = 0; j < m; ++j) spec.consumption.push_back(rng.NextUniform(0.2, 1.0));
        specs.push_back(spec);
      }
      dist.types.push_back({MakeMenu(m, specs), 0.5});
    }
    inst.distributions.push_back(dist);
  }
  return inst;
}

// Exact expectation of each part's LP consumption, enumerating every type
// combination inside the part.
Matrix ExactPartExpectation(const Instance& inst, const estimation::Partition& part,
                            double epsilon) {
  const int D = static_cast<int>(part.parts.size());
  std::vector<double> part_budget = inst.budgets;
  for (double& b : part_budget) b *= (1.0 - epsilon) / D;
  Matrix expect(inst.n(), inst.m);
  for (const auto& members : part.parts) {
    const int s = static_cast<int>(members.size());
    for (int mask = 0; mask < (1 << s); ++mask) {
      std::vector<RealizedRequest> reqs;
      double weight = 1.0;
      for (int r = 0; r < s; ++r) {
        const int k = (mask >> r) & 1;
        const RequestType& type = inst.distributions[members[r]].types[k];
        weight *= type.probability;
        reqs.push_back({members[r], k, type.decisions});
      }
      const lp::PackingLP program = *lp::BuildSampleLp(reqs, part_budget);
      const Matrix local = lp::SolutionConsumption(program, *lp::SolvePackingLp(program));
      for (int r = 0; r < s; ++r) {
        for (int j = 0; j < inst.m; ++j) expect(members[r], j) += weight * local(r, j);
      }
    }
  }
  return expect;
}

Outcome Unbiasedness() {
  const double eps = 0.25;
  const int n = 12;
  const int m = 2;
  const int D = 4;
  const int samples = 2000;
  int cells = 0;
  int within = 0;
  for (uint64_t inst_seed = 1; inst_seed <= 4; ++inst_seed) {
    RandomStream gen(DeriveSeed(4004, inst_seed));
    const Instance inst = TwoTypeInstance(n, m, 3.0, gen);
    const estimation::Partition part = *estimation::RandomPartition(n, D, gen);
    const Matrix target = ExactPartExpectation(inst, part, eps);

    std::vector<std::vector<double>> prefix(n * m);
    RandomStream rng(DeriveSeed(4005, inst_seed));
    for (int s = 0; s < samples; ++s) {
      const auto sample = SampleRealization(inst, rng);
      const Matrix a = *estimation::EstimatePrefixConsumptions(sample, part, inst.budgets, eps);
      for (int j = 0; j < m; ++j) {
        double acc = 0.0;
        for (int i = 0; i < n; ++i) {
          acc += a(i, j);
          prefix[i * m + j].push_back(acc);
        }
      }
    }
    for (int j = 0; j < m; ++j) {
      double acc = 0.0;
      for (int i = 0; i < n; ++i) {
        acc += target(i, j);
        const MeanSe st = Stats(prefix[i * m + j]);
        ++cells;
        within += std::abs(st.mean - acc) <= 3.0 * st.se + 1e-12;
      }
    }
  }
  const double share = static_cast<double>(within) / cells;
  return {share >= 0.95, absl::StrFormat("cells_within_3se=%d/%d (%.3f)", within, cells, share)};
}

Outcome OptHat() {
  const double eps = 0.25;
  genlab::GeneratorConfig cfg;
  cfg.family = genlab::Family::kNonidentical;
  cfg.n = 100;
  cfg.m = 2;
  cfg.k_max = 3;
  cfg.menu_size = 2;
  cfg.epsilon = eps;
  cfg.budget_rule = genlab::BudgetRule::kFixed;
  cfg.budget = 8.0;
  const int draws = 500;
  int below_ub = 0;
  int count_ok = 0;
  for (int s = 0; s < draws; ++s) {
    cfg.seed = DeriveSeed(5005, s);
    const Instance inst = *genlab::GenProphetInstance(cfg);
    RandomStream rng(cfg.seed);
    const auto sample = SampleRealization(inst, rng);
    const double opt_hat = *estimation::EstimateOptHat(sample, eps);
    below_ub += opt_hat <= *lp::LpUpperBound(inst);
    const auto fresh = SampleRealization(inst, rng);
    int high = 0;
    for (const RealizedRequest& r : fresh) {
      double best = 0.0;
      for (const Decision& d : r.decisions) best = std::max(best, d.value);
      high += best > opt_hat;
    }
    count_ok += high <= 10.0 / eps;
  }
  const double p1 = static_cast<double>(below_ub) / draws;
  const double p2 = static_cast<double>(count_ok) / draws;
  const bool pass = p1 >= 1.0 - 2.0 * eps - 3.0 * FrequencySe(p1, draws) &&
                    p2 >= 1.0 - eps - 3.0 * FrequencySe(p2, draws);
  return {pass, absl::StrFormat("Pr[opt_hat<=lp_ub]=%.3f Pr[count<=10/eps]=%.3f", p1, p2)};
}

Outcome SingleSampleRatio() {
  harness::ExperimentConfig cfg;
  cfg.algorithm = harness::Algorithm::kSingleSample;
  cfg.trials = 200;
  cfg.seed = 6006;
  cfg.epsilon = 0.25;
  cfg.partitions = 64;
  cfg.generator.family = genlab::Family::kNonidentical;
  cfg.generator.n = 2000;
  cfg.generator.m = 4;
  cfg.generator.k_max = 3;
  cfg.generator.sparsity = 1.0;
  cfg.generator.epsilon = cfg.epsilon;
  cfg.generator.budget_rule = genlab::BudgetRule::kMinimal;
  cfg.generator.seed = 6007;
  std::vector<MeanSe> by_budget;
  std::string detail;
  bool pass = true;
  for (double mult : {1.0, 2.0, 4.0}) {
    cfg.generator.budget_multiplier = mult;
    absl::StatusOr<harness::Report> report = harness::RunExperiment(cfg);
    if (!report.ok()) return {false, report.status().ToString()};
    std::vector<double> ratios;
    int failed = 0;
    for (const harness::TrialRow& row : report->rows) {
      if (row.status != "ok" || std::isnan(row.ratio)) {
        ++failed;
        continue;
      }
      ratios.push_back(row.ratio);
    }
    const MeanSe st = Stats(ratios);
    by_budget.push_back(st);
    pass &= failed == 0 && st.mean >= 1.0 - 5.0 * cfg.epsilon;
    detail += absl::StrFormat("B=%.0f mean=%.4f se=%.4f failed=%d; ", report->rows[0].budget,
                              st.mean, st.se, failed);
  }
  for (size_t k = 1; k < by_budget.size(); ++k) {
    const double slack = 2.0 * std::hypot(by_budget[k].se, by_budget[k - 1].se);
    pass &= by_budget[k].mean >= by_budget[k - 1].mean - slack;
  }
  return {pass, detail + "trend nondecreasing within 2 SE"};
}

Outcome ByzantineInvariants() {
  const double eps = 0.25;
  genlab::GeneratorConfig cfg;
  cfg.family = genlab::Family::kByzantine;
  cfg.n = 40;
  cfg.m = 2;
  cfg.epsilon = eps;
  cfg.budget_rule = genlab::BudgetRule::kByzantine;
  cfg.red_fraction = 0.25;
  int half_violations = 0;
  int cap_violations = 0;
  int runs = 0;
  for (genlab::RedPreset preset :
       {genlab::RedPreset::kFrontLoaded, genlab::RedPreset::kValueDecoys,
        genlab::RedPreset::kBudgetBurners, genlab::RedPreset::kUniformRed}) {
    cfg.red_preset = preset;
    for (uint64_t s = 1; s <= 200; ++s) {
      cfg.seed = DeriveSeed(7007, s);
      const byzantine::ByzantineScenario sc = *genlab::GenByzantineScenario(cfg);
      RandomStream rng(cfg.seed);
      const byzantine::SlotSchedule sched = *byzantine::Discretize(sc, eps, rng);
      const byzantine::ByzantineRun run = *byzantine::RunByzantinePricing(sc, sched, eps);
      ++runs;
      for (int j = 0; j < sc.m; ++j) {
        half_violations += run.half_consumption[0][j] > sc.budgets[j] / 2.0 + 1.0;
      }
      for (const StepRecord& step : run.trace.steps) {
        if (step.chosen == 0) continue;
        for (double p : step.prices) cap_violations += p > run.params.price_cap * (1.0 + 1e-12);
      }
    }
  }

  // Random order only, tiny instances with the exact green optimum.
  cfg.red_fraction = 0.0;
  cfg.n = 8;
  std::vector<double> values;
  std::vector<double> optima;
  for (uint64_t s = 1; s <= 200; ++s) {
    cfg.seed = DeriveSeed(7008, s);
    const byzantine::ByzantineScenario sc = *genlab::GenByzantineScenario(cfg);
    const byzantine::GreenBenchmark bench = *byzantine::EvaluateGreenBenchmark(sc);
    if (bench.kind != "brute_force") return {false, "green benchmark fell back to the LP"};
    RandomStream rng(cfg.seed);
    const byzantine::SlotSchedule sched = *byzantine::Discretize(sc, eps, rng);
    values.push_back(byzantine::RunByzantinePricing(sc, sched, eps)->trace.total_value);
    optima.push_back(bench.value);
  }
  const double ratio = Stats(values).mean / Stats(optima).mean;
  return {half_violations == 0 && cap_violations == 0 && ratio >= 1.0 - 4.0 * eps,
          absl::StrFormat("runs=%d half_budget_violations=%d price_cap_violations=%d "
                          "random_order_ratio=%.4f",
                          runs, half_violations, cap_violations, ratio)};
}

Outcome Discretization() {
  const double eps = 0.2;
  byzantine::ByzantineScenario sc;
  sc.m = 1;
  sc.budgets = {1.0};
  for (int i = 0; i < 16; ++i) sc.green.push_back(MakeMenu(1, {}));
  for (int r = 0; r < 4; ++r) sc.red.push_back({0.1 + 0.2 * r, MakeMenu(1, {})});
  RandomStream rng(8008);
  const int draws = 10000;
  int hits = 0;
  int64_t T = 0;
  for (int s = 0; s < draws; ++s) {
    const byzantine::SlotSchedule sched = *byzantine::Discretize(sc, eps, rng);
    T = sched.T;
    hits += sched.had_conflict();
  }
  const double p = static_cast<double>(hits) / draws;
  return {p <= eps + 3.0 * FrequencySe(p, draws),
          absl::StrFormat("T=%d conflict_frequency=%.4f", T, p)};
}

Outcome AugmentationDominance() {
  const double eps = 0.25;
  genlab::GeneratorConfig cfg;
  cfg.family = genlab::Family::kAugmentation;
  cfg.n = 100;
  cfg.m = 2;
  cfg.k_max = 2;
  cfg.menu_size = 3;
  cfg.epsilon = eps;
  cfg.budget_rule = genlab::BudgetRule::kMinimal;
  int steps = 0;
  int violations = 0;
  int mismatched_traces = 0;
  for (uint64_t s = 1; s <= 200; ++s) {
    cfg.seed = DeriveSeed(9009, s);
    const Instance inst = *genlab::GenProphetInstance(cfg);
    const pricing::Estimates est = *pricing::KnownDistributionEstimates(inst, eps);
    for (genlab::AugPreset preset :
         {genlab::AugPreset::kZero, genlab::AugPreset::kUniformBoost,
          genlab::AugPreset::kMisleading, genlab::AugPreset::kSpike}) {
      RandomStream plan_rng(DeriveSeed(cfg.seed, 1));
      const augment::AugmentationPlan plan =
          *genlab::GenAugmentationPlan(inst, preset, 1.0, plan_rng);
      RandomStream rng(DeriveSeed(cfg.seed, 2));
      const auto reqs = SampleRealization(inst, rng);
      const Trace t = *augment::RunAugmentedPricingOn(reqs, inst.budgets, plan, est, eps);
      for (const StepRecord& step : t.steps) {
        ++steps;
        double chosen = step.value;
        for (size_t j = 0; j < step.prices.size(); ++j) {
          chosen -= step.prices[j] * step.consumption[j];
        }
        const Menu& menu = reqs[step.step].decisions;
        const double base = Utility(menu[BestResponseIndex(menu, step.prices)], step.prices);
        violations += chosen < base - 1e-9;
      }
      if (preset == genlab::AugPreset::kZero) {
        RandomStream plain_rng(DeriveSeed(cfg.seed, 2));
        const Trace plain = *pricing::RunExponentialPricing(inst, est, eps, plain_rng);
        mismatched_traces += !(plain == t);
      }
    }
  }
  return {violations == 0 && mismatched_traces == 0,
          absl::StrFormat("steps=%d dominance_violations=%d zero_plan_mismatches=%d", steps,
                          violations, mismatched_traces)};
}

Outcome HardInstance() {
  struct Case {
    int z;
    int B;
    bool round;
  };
  std::string detail;
  int violations = 0;
  for (const Case& c : {Case{1, 4, false}, Case{2, 8, false}, Case{2, 16, true}}) {
    absl::StatusOr<genlab::HardInstance> hard = genlab::GenHardInstance(c.z, c.B, c.round);
    if (!hard.ok()) return {false, hard.status().ToString()};
    RandomStream rng(DeriveSeed(10010, c.z * 100 + c.B));
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (int r = 0; r < 100; ++r) {
      const auto reqs = SampleRealization(hard->instance, rng);
      absl::StatusOr<lp::OfflineOptimum> opt =
          lp::BruteForceOfflineOpt(reqs, hard->instance.budgets);
      if (!opt.ok()) return {false, opt.status().ToString()};
      lo = std::min(lo, opt->value);
      hi = std::max(hi, opt->value);
      violations += opt->value < 5.0 * c.B || opt->value > 7.0 * c.B;
    }
    detail += absl::StrFormat("(z=%d,B=%d,n=%d): [%g, %g] in [%d, %d]; ", c.z, c.B,
                              hard->instance.n(), lo, hi, 5 * c.B, 7 * c.B);
  }
  return {violations == 0, detail + absl::StrFormat("violations=%d", violations)};
}

struct Criterion {
  int id;
  const char* name;
  double time_limit_s;  // 0 means no limit
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace orabench::acceptance

int main() {
  using orabench::acceptance::Criterion;
  using orabench::acceptance::Outcome;
  namespace acc = orabench::acceptance;
  const Criterion criteria[] = {
      {1, "no-regret certificate", 10.0, acc::NoRegret},
      {2, "budget feasibility", 60.0, acc::BudgetFeasibility},
      {3, "LP solver oracle equivalence", 30.0, acc::LpOracle},
      {4, "estimator unbiasedness", 120.0, acc::Unbiasedness},
      {5, "opt_hat estimator", 0.0, acc::OptHat},
      {6, "single-sample ratio and budget trend", 600.0, acc::SingleSampleRatio},
      {7, "byzantine invariants", 0.0, acc::ByzantineInvariants},
      {8, "discretization conflicts", 0.0, acc::Discretization},
      {9, "augmentation dominance", 0.0, acc::AugmentationDominance},
      {10, "hard instance optimum range", 60.0, acc::HardInstance},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out = c.run();
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0.0 && secs >= c.time_limit_s) {
      out.pass = false;
      out.detail += absl::StrFormat(" [over the %.0f s limit]", c.time_limit_s);
    }
    failed += !out.pass;
    std::printf("[%s] criterion %d: %s: %s (%.2f s)\n", out.pass ? "PASS" : "FAIL", c.id,
                c.name, out.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failed;
}
