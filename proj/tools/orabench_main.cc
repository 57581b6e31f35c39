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

// orabench: generate instances, run experiments, summarize reports, validate
// inputs and check the lower-bound instance.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/strings/str_split.h"
#include "orabench/genlab/generators.h"
#include "orabench/harness/experiment.h"
#include "orabench/harness/json_io.h"
#include "orabench/harness/report.h"
#include "orabench/lp/brute_force.h"
#include "orabench/lp/lp_dump.h"
#include "orabench/lp/packing_lp.h"
#include "orabench/validate.h"

namespace {

using orabench::harness::ReadFile;
using orabench::harness::WriteFile;

int Fail(const absl::Status& status) {
  std::cerr << "orabench: " << status << "\n";
  return 1;
}

// Writes to `path`, or stdout for "-" or an empty path.
absl::Status Emit(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return absl::OkStatus();
  }
  return WriteFile(path, content);
}

struct GenOptions {
  std::string config;
  std::string family = "nonidentical";
  std::string budget_rule = "pricing";
  std::string red_preset = "uniform_red";
  std::string aug_preset = "zero";
  std::string out = "-";
  std::string plan_out;
  std::string lp_out;
  orabench::genlab::GeneratorConfig cfg;
};

int RunGen(GenOptions& opt, const CLI::App& cmd) {
  namespace genlab = orabench::genlab;
  genlab::GeneratorConfig cfg = opt.cfg;
  if (!opt.config.empty()) {
    absl::StatusOr<std::string> text = ReadFile(opt.config);
    if (!text.ok()) return Fail(text.status());
    absl::StatusOr<genlab::GeneratorConfig> parsed =
        orabench::harness::GeneratorConfigFromJson(*text);
    if (!parsed.ok()) return Fail(parsed.status());
    const uint64_t seed = cmd.count("--seed") ? cfg.seed : parsed->seed;
    cfg = *parsed;
    cfg.seed = seed;
  }
  if (opt.config.empty() || cmd.count("--family")) {
    absl::StatusOr<genlab::Family> family = genlab::ParseFamily(opt.family);
    if (!family.ok()) return Fail(family.status());
    cfg.family = *family;
  }
  if (opt.config.empty() || cmd.count("--budget-rule")) {
    absl::StatusOr<genlab::BudgetRule> rule =
        genlab::ParseBudgetRule(opt.budget_rule);
    if (!rule.ok()) return Fail(rule.status());
    cfg.budget_rule = *rule;
  }
  if (opt.config.empty() || cmd.count("--red-preset")) {
    absl::StatusOr<genlab::RedPreset> red = genlab::ParseRedPreset(opt.red_preset);
    if (!red.ok()) return Fail(red.status());
    cfg.red_preset = *red;
  }
  if (opt.config.empty() || cmd.count("--aug-preset")) {
    absl::StatusOr<genlab::AugPreset> aug = genlab::ParseAugPreset(opt.aug_preset);
    if (!aug.ok()) return Fail(aug.status());
    cfg.aug_preset = *aug;
  }

  if (cfg.family == genlab::Family::kByzantine) {
    absl::StatusOr<orabench::byzantine::ByzantineScenario> sc =
        genlab::GenByzantineScenario(cfg);
    if (!sc.ok()) return Fail(sc.status());
    absl::Status st = Emit(opt.out, orabench::harness::ScenarioToJson(*sc));
    return st.ok() ? 0 : Fail(st);
  }

  orabench::Instance inst;
  if (cfg.family == genlab::Family::kHardLowerBound) {
    absl::StatusOr<genlab::HardInstance> hard =
        genlab::GenHardInstance(cfg.z, cfg.hard_budget, cfg.round_group_sizes);
    if (!hard.ok()) return Fail(hard.status());
    std::cerr << "implied epsilon = sqrt(z/B) = " << hard->epsilon << "\n";
    inst = std::move(hard->instance);
  } else {
    absl::StatusOr<orabench::Instance> gen = genlab::GenProphetInstance(cfg);
    if (!gen.ok()) return Fail(gen.status());
    inst = *std::move(gen);
  }
  if (absl::Status st = Emit(opt.out, orabench::harness::InstanceToJson(inst));
      !st.ok()) {
    return Fail(st);
  }
  if (!opt.plan_out.empty()) {
    orabench::RandomStream rng(orabench::DeriveSeed(cfg.seed, 0x706c616eULL));
    absl::StatusOr<orabench::augment::AugmentationPlan> plan =
        genlab::GenAugmentationPlan(inst, cfg.aug_preset, cfg.aug_strength, rng);
    if (!plan.ok()) return Fail(plan.status());
    if (absl::Status st =
            WriteFile(opt.plan_out, orabench::harness::PlanToJson(*plan));
        !st.ok()) {
      return Fail(st);
    }
  }
  if (!opt.lp_out.empty()) {
    absl::StatusOr<orabench::lp::PackingLP> lp =
        orabench::lp::BuildConfigurationLp(inst, 1.0);
    if (!lp.ok()) return Fail(lp.status());
    if (absl::Status st = WriteFile(opt.lp_out, orabench::lp::DumpLp(*lp));
        !st.ok()) {
      return Fail(st);
    }
  }
  return 0;
}

struct RunOptions {
  std::string config;
  uint64_t seed = 0;
  std::string out = "-";
  int trials = 0;
  std::string algorithm;
  int threads = 0;
  std::string trace_out;
  std::string trace_summary;
  int trace_trial = 0;
};

int RunRun(const RunOptions& opt, const CLI::App& cmd) {
  namespace harness = orabench::harness;
  absl::StatusOr<std::string> text = ReadFile(opt.config);
  if (!text.ok()) return Fail(text.status());
  const std::string base =
      std::filesystem::path(opt.config).parent_path().string();
  absl::StatusOr<harness::ExperimentConfig> cfg =
      harness::ExperimentConfigFromJson(*text, base);
  if (!cfg.ok()) return Fail(cfg.status());
  if (cmd.count("--seed")) cfg->seed = opt.seed;
  if (opt.trials > 0) cfg->trials = opt.trials;
  if (opt.threads > 0) cfg->threads = opt.threads;
  if (!opt.algorithm.empty()) {
    absl::StatusOr<harness::Algorithm> algo = harness::ParseAlgorithm(opt.algorithm);
    if (!algo.ok()) return Fail(algo.status());
    cfg->algorithm = *algo;
  }
  absl::StatusOr<harness::Report> report = harness::RunExperiment(*cfg);
  if (!report.ok()) return Fail(report.status());
  std::ostringstream csv;
  harness::WriteReportCsv(*report, csv);
  if (absl::Status st = Emit(opt.out, csv.str()); !st.ok()) return Fail(st);

  if (!opt.trace_out.empty() || !opt.trace_summary.empty()) {
    absl::StatusOr<harness::TrialTrace> tt =
        harness::RunTrialWithTrace(*cfg, opt.trace_trial);
    if (!tt.ok()) return Fail(tt.status());
    if (!opt.trace_out.empty()) {
      std::ostringstream jsonl;
      harness::WriteTraceJsonl(tt->trace, jsonl);
      if (absl::Status st = WriteFile(opt.trace_out, jsonl.str()); !st.ok()) {
        return Fail(st);
      }
    }
    if (!opt.trace_summary.empty()) {
      std::ostringstream sum;
      harness::WriteTraceSummaryCsv(tt->trace, tt->budgets, sum);
      if (absl::Status st = WriteFile(opt.trace_summary, sum.str()); !st.ok()) {
        return Fail(st);
      }
    }
  }
  return 0;
}

int RunSummarize(const std::string& report_path, const std::string& group_by,
                 const std::string& out) {
  namespace harness = orabench::harness;
  std::ifstream in(report_path);
  if (!in) return Fail(absl::NotFoundError("cannot open " + report_path));
  absl::StatusOr<harness::Report> report = harness::ReadReportCsv(in);
  if (!report.ok()) return Fail(report.status());
  std::vector<std::string> keys;
  if (!group_by.empty()) keys = absl::StrSplit(group_by, ',');
  absl::StatusOr<harness::Summary> summary = harness::Summarize(*report, keys);
  if (!summary.ok()) return Fail(summary.status());
  std::ostringstream csv;
  harness::WriteSummaryCsv(*summary, csv);
  absl::Status st = Emit(out, csv.str());
  return st.ok() ? 0 : Fail(st);
}

struct ValidateOptions {
  std::string instance;
  std::string scenario;
  std::string plan;
  std::string estimates;
};

int RunValidate(const ValidateOptions& opt) {
  namespace harness = orabench::harness;
  int problems = 0;
  auto report = [&problems](const std::string& what, const absl::Status& st) {
    if (st.ok()) {
      std::cout << what << ": ok\n";
    } else {
      ++problems;
      std::cout << what << ": " << st.message() << "\n";
    }
  };
  if (!opt.instance.empty()) {
    absl::StatusOr<std::string> text = ReadFile(opt.instance);
    if (!text.ok()) return Fail(text.status());
    absl::StatusOr<orabench::Instance> inst = harness::InstanceFromJson(*text);
    if (!inst.ok()) return Fail(inst.status());
    const std::vector<orabench::Violation> v = orabench::ValidateInstance(*inst);
    for (const orabench::Violation& e : v) {
      std::cout << orabench::ToString(e.kind) << "\t" << e.where << "\t"
                << e.message << "\n";
    }
    std::cout << opt.instance << ": " << v.size() << " violation(s)\n";
    problems += static_cast<int>(v.size());
  }
  if (!opt.scenario.empty()) {
    absl::StatusOr<std::string> text = ReadFile(opt.scenario);
    if (!text.ok()) return Fail(text.status());
    absl::StatusOr<orabench::byzantine::ByzantineScenario> sc =
        harness::ScenarioFromJson(*text);
    report(opt.scenario, sc.ok() ? orabench::byzantine::ValidateScenario(*sc)
                                 : sc.status());
  }
  if (!opt.plan.empty()) {
    absl::StatusOr<std::string> text = ReadFile(opt.plan);
    if (!text.ok()) return Fail(text.status());
    report(opt.plan, harness::PlanFromJson(*text).status());
  }
  if (!opt.estimates.empty()) {
    absl::StatusOr<std::string> text = ReadFile(opt.estimates);
    if (!text.ok()) return Fail(text.status());
    absl::StatusOr<orabench::pricing::Estimates> est =
        harness::EstimatesFromJson(*text);
    report(opt.estimates,
           est.ok() ? orabench::pricing::ValidateEstimates(
                          *est, est->a_hat.rows(), est->a_hat.cols())
                    : est.status());
  }
  return problems == 0 ? 0 : 1;
}

struct LowerBoundOptions {
  int z = 1;
  int budget = 4;
  int realizations = 100;
  uint64_t seed = 1;
  bool round = false;
  std::string out;
};

int RunLowerBound(const LowerBoundOptions& opt) {
  absl::StatusOr<orabench::genlab::HardInstance> hard =
      orabench::genlab::GenHardInstance(opt.z, opt.budget, opt.round);
  if (!hard.ok()) return Fail(hard.status());
  if (!opt.out.empty()) {
    if (absl::Status st =
            WriteFile(opt.out, orabench::harness::InstanceToJson(hard->instance));
        !st.ok()) {
      return Fail(st);
    }
  }
  const double lo = 5.0 * opt.budget;
  const double hi = 7.0 * opt.budget;
  std::cout << "z=" << opt.z << " B=" << opt.budget
            << " m=" << hard->instance.m << " n=" << hard->instance.n()
            << " groups=" << hard->group1 << "/" << hard->group2 << "/"
            << hard->group3 << " epsilon=" << hard->epsilon << "\n";
  int violations = 0;
  double min_opt = INFINITY;
  double max_opt = -INFINITY;
  double sum = 0.0;
  for (int r = 0; r < opt.realizations; ++r) {
    orabench::RandomStream rng(orabench::DeriveSeed(opt.seed, r));
    const std::vector<orabench::RealizedRequest> req =
        orabench::SampleRealization(hard->instance, rng);
    absl::StatusOr<orabench::lp::OfflineOptimum> best =
        orabench::lp::BruteForceOfflineOpt(req, hard->instance.budgets);
    if (!best.ok()) return Fail(best.status());
    min_opt = std::min(min_opt, best->value);
    max_opt = std::max(max_opt, best->value);
    sum += best->value;
    if (best->value < lo - 1e-9 || best->value > hi + 1e-9) ++violations;
  }
  std::cout << "offline optimum over " << opt.realizations
            << " realizations: min=" << min_opt << " mean="
            << sum / std::max(1, opt.realizations) << " max=" << max_opt
            << "\n";
  std::cout << "[5B, 7B] = [" << lo << ", " << hi << "] check: "
            << (violations == 0 ? "pass" : "FAIL") << " (" << violations
            << " violation(s))\n";
  return violations == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exponential Pricing benchmark harness"};
  app.require_subcommand(1);

  GenOptions gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate an instance, scenario or plan");
  gen_cmd->add_option("--config", gen.config, "Generator config JSON");
  gen_cmd->add_option("--family", gen.family,
                      "iid|nonidentical|decoy|hard_lower_bound|byzantine|augmentation");
  gen_cmd->add_option("--seed", gen.cfg.seed, "64-bit seed");
  gen_cmd->add_option("--out", gen.out, "Output JSON path ('-' for stdout)");
  gen_cmd->add_option("--n", gen.cfg.n, "Number of requests");
  gen_cmd->add_option("--m", gen.cfg.m, "Number of resources");
  gen_cmd->add_option("--epsilon", gen.cfg.epsilon, "Accuracy parameter");
  gen_cmd->add_option("--budget-rule", gen.budget_rule,
                      "fixed|pricing|minimal|byzantine");
  gen_cmd->add_option("--budget", gen.cfg.budget, "Budget for the fixed rule");
  gen_cmd->add_option("--budget-multiplier", gen.cfg.budget_multiplier);
  gen_cmd->add_option("--k-max", gen.cfg.k_max, "Maximum types per request");
  gen_cmd->add_option("--menu-size", gen.cfg.menu_size, "Non-null decisions per type");
  gen_cmd->add_option("--value-min", gen.cfg.value_min);
  gen_cmd->add_option("--value-max", gen.cfg.value_max);
  gen_cmd->add_option("--sparsity", gen.cfg.sparsity);
  gen_cmd->add_option("--z", gen.cfg.z, "Hard instance: bits per item");
  gen_cmd->add_option("--B", gen.cfg.hard_budget, "Hard instance: copies per item");
  gen_cmd->add_flag("--round-group-sizes", gen.cfg.round_group_sizes);
  gen_cmd->add_option("--red-fraction", gen.cfg.red_fraction);
  gen_cmd->add_option("--red-preset", gen.red_preset,
                      "front_loaded|value_decoys|budget_burners|uniform_red");
  gen_cmd->add_option("--aug-preset", gen.aug_preset,
                      "zero|uniform_boost|misleading|spike");
  gen_cmd->add_option("--aug-strength", gen.cfg.aug_strength);
  gen_cmd->add_option("--plan-out", gen.plan_out, "Also write an augmentation plan");
  gen_cmd->add_option("--lp-out", gen.lp_out, "Also write the configuration LP");

  RunOptions run;
  CLI::App* run_cmd = app.add_subcommand("run", "Run a Monte-Carlo experiment");
  run_cmd->add_option("--config", run.config, "Experiment config JSON")->required();
  run_cmd->add_option("--seed", run.seed, "Master seed (overrides the config)");
  run_cmd->add_option("--out", run.out, "Report CSV path ('-' for stdout)");
  run_cmd->add_option("--trials", run.trials, "Trial count (overrides the config)");
  run_cmd->add_option("--algorithm", run.algorithm, "Algorithm (overrides the config)");
  run_cmd->add_option("--threads", run.threads, "Worker cap");
  run_cmd->add_option("--trace-out", run.trace_out, "JSONL trace of one trial");
  run_cmd->add_option("--trace-summary", run.trace_summary,
                      "CSV summary of the traced trial");
  run_cmd->add_option("--trace-trial", run.trace_trial, "Trial to trace");

  std::string report_path;
  std::string group_by;
  std::string summary_out = "-";
  CLI::App* sum_cmd = app.add_subcommand("summarize", "Aggregate a report CSV");
  sum_cmd->add_option("--report", report_path, "Report CSV")->required();
  sum_cmd->add_option("--group-by", group_by, "Comma-separated report columns");
  sum_cmd->add_option("--out", summary_out, "Summary CSV path ('-' for stdout)");

  ValidateOptions val;
  CLI::App* val_cmd = app.add_subcommand("validate", "Validate input files");
  val_cmd->add_option("--instance", val.instance);
  val_cmd->add_option("--scenario", val.scenario);
  val_cmd->add_option("--plan", val.plan);
  val_cmd->add_option("--estimates", val.estimates);

  LowerBoundOptions lb;
  CLI::App* lb_cmd = app.add_subcommand(
      "lower-bound", "Brute-force realizations of the hard instance");
  lb_cmd->add_option("--z", lb.z);
  lb_cmd->add_option("--B", lb.budget);
  lb_cmd->add_option("--realizations", lb.realizations);
  lb_cmd->add_option("--seed", lb.seed);
  lb_cmd->add_flag("--round-group-sizes", lb.round);
  lb_cmd->add_option("--out", lb.out, "Also write the instance JSON");

  CLI11_PARSE(app, argc, argv);

  if (*gen_cmd) return RunGen(gen, *gen_cmd);
  if (*run_cmd) return RunRun(run, *run_cmd);
  if (*sum_cmd) return RunSummarize(report_path, group_by, summary_out);
  if (*val_cmd) return RunValidate(val);
  if (*lb_cmd) return RunLowerBound(lb);
  return 1;
}
