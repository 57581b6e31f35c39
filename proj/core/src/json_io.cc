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

#include "orabench/harness/json_io.h"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "absl/strings/str_cat.h"
#include "json.hpp"

namespace orabench::harness {
namespace {

using nlohmann::json;

json MenuToJson(const Menu& menu) {
  json out = json::array();
  for (const Decision& d : menu) out.push_back({{"v", d.value}, {"a", d.consumption}});
  return out;
}

// Decision ids follow list positions; the null decision is prepended when
// the list does not start with one.
Menu MenuFromJson(const json& j, int m) {
  Menu menu;
  for (const json& d : j) {
    Decision dec;
    dec.value = d.at("v").get<double>();
    dec.consumption = d.at("a").get<std::vector<double>>();
    menu.push_back(std::move(dec));
  }
  if (menu.empty() || !menu.front().IsNull()) {
    menu.insert(menu.begin(), NullDecision(m));
  }
  for (size_t t = 0; t < menu.size(); ++t) menu[t].id = static_cast<int>(t);
  return menu;
}

json InstanceFields(int m, const std::vector<double>& budgets,
                    const std::vector<RequestDistribution>& dists) {
  json j;
  j["m"] = m;
  j["budgets"] = budgets;
  json all = json::array();
  for (const RequestDistribution& dist : dists) {
    json types = json::array();
    for (const RequestType& type : dist.types) {
      types.push_back({{"p", type.probability},
                       {"decisions", MenuToJson(type.decisions)}});
    }
    all.push_back(std::move(types));
  }
  j["distributions"] = std::move(all);
  return j;
}

Instance InstanceFromFields(const json& j) {
  Instance inst;
  inst.m = j.at("m").get<int>();
  inst.budgets = j.at("budgets").get<std::vector<double>>();
  for (const json& types : j.at("distributions")) {
    RequestDistribution dist;
    for (const json& type : types) {
      RequestType t;
      t.probability = type.value("p", 1.0);
      t.decisions = MenuFromJson(type.at("decisions"), inst.m);
      dist.types.push_back(std::move(t));
    }
    inst.distributions.push_back(std::move(dist));
  }
  return inst;
}

// Wraps a parse step so that JSON exceptions become InvalidArgument.
template <typename F>
auto Guarded(const std::string& what, F&& f) -> absl::StatusOr<decltype(f())> {
  try {
    return f();
  } catch (const json::exception& e) {
    return absl::InvalidArgumentError(absl::StrCat(what, ": ", e.what()));
  }
}

absl::Status CheckKeys(const json& j, std::initializer_list<const char*> keys,
                       const std::string& what) {
  if (!j.is_object()) {
    return absl::InvalidArgumentError(absl::StrCat(what, " must be an object"));
  }
  for (const auto& item : j.items()) {
    bool known = false;
    for (const char* k : keys) known = known || item.key() == k;
    if (!known) {
      return absl::InvalidArgumentError(
          absl::StrCat("unknown key '", item.key(), "' in ", what));
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<genlab::GeneratorConfig> GeneratorFromJsonValue(
    const json& j, double default_epsilon) {
  if (absl::Status s = CheckKeys(
          j,
          {"family", "n", "m", "budget_rule", "budget", "budget_multiplier",
           "epsilon", "seed", "k_max", "menu_size", "value_min", "value_max",
           "sparsity", "z", "B", "round_group_sizes", "red_fraction",
           "red_preset", "aug_preset", "aug_strength"},
          "generator");
      !s.ok()) {
    return s;
  }
  genlab::GeneratorConfig cfg;
  cfg.epsilon = default_epsilon;
  absl::Status st = absl::OkStatus();
  auto parse_enum = [&](const char* key, auto parser, auto& field) {
    if (!st.ok() || !j.contains(key)) return;
    auto parsed = parser(j.at(key).get<std::string>());
    if (parsed.ok()) {
      field = *parsed;
    } else {
      st = parsed.status();
    }
  };
  absl::StatusOr<bool> done = Guarded("generator", [&] {
    parse_enum("family", genlab::ParseFamily, cfg.family);
    parse_enum("budget_rule", genlab::ParseBudgetRule, cfg.budget_rule);
    parse_enum("red_preset", genlab::ParseRedPreset, cfg.red_preset);
    parse_enum("aug_preset", genlab::ParseAugPreset, cfg.aug_preset);
    cfg.n = j.value("n", cfg.n);
    cfg.m = j.value("m", cfg.m);
    cfg.budget = j.value("budget", cfg.budget);
    cfg.budget_multiplier = j.value("budget_multiplier", cfg.budget_multiplier);
    cfg.epsilon = j.value("epsilon", cfg.epsilon);
    cfg.seed = j.value("seed", cfg.seed);
    cfg.k_max = j.value("k_max", cfg.k_max);
    cfg.menu_size = j.value("menu_size", cfg.menu_size);
    cfg.value_min = j.value("value_min", cfg.value_min);
    cfg.value_max = j.value("value_max", cfg.value_max);
    cfg.sparsity = j.value("sparsity", cfg.sparsity);
    cfg.z = j.value("z", cfg.z);
    cfg.hard_budget = j.value("B", cfg.hard_budget);
    cfg.round_group_sizes = j.value("round_group_sizes", cfg.round_group_sizes);
    cfg.red_fraction = j.value("red_fraction", cfg.red_fraction);
    cfg.aug_strength = j.value("aug_strength", cfg.aug_strength);
    return true;
  });
  if (!done.ok()) return done.status();
  if (!st.ok()) return st;
  return cfg;
}

std::string JoinPath(const std::string& base, const std::string& path) {
  const std::filesystem::path p(path);
  if (p.is_absolute() || base.empty()) return path;
  return (std::filesystem::path(base) / p).string();
}

}  // namespace

std::string InstanceToJson(const Instance& inst) {
  return InstanceFields(inst.m, inst.budgets, inst.distributions).dump(1);
}

absl::StatusOr<Instance> InstanceFromJson(const std::string& text) {
  return Guarded("instance JSON",
                 [&] { return InstanceFromFields(json::parse(text)); });
}

std::string EstimatesToJson(const pricing::Estimates& est) {
  json rows = json::array();
  for (int i = 0; i < est.a_hat.rows(); ++i) {
    const auto row = est.a_hat.row(i);
    rows.push_back(std::vector<double>(row.begin(), row.end()));
  }
  json j{{"opt_hat", est.opt_hat}, {"beta", est.beta}, {"a_hat", rows}};
  return j.dump(1);
}

absl::StatusOr<pricing::Estimates> EstimatesFromJson(const std::string& text) {
  absl::StatusOr<pricing::Estimates> est =
      Guarded("estimates JSON", [&]() -> pricing::Estimates {
        const json j = json::parse(text);
        pricing::Estimates e;
        e.opt_hat = j.at("opt_hat").get<double>();
        e.beta = j.value("beta", 1.0);
        const auto rows = j.at("a_hat").get<std::vector<std::vector<double>>>();
        const int cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
        e.a_hat = Matrix(static_cast<int>(rows.size()), cols);
        for (size_t i = 0; i < rows.size(); ++i) {
          if (static_cast<int>(rows[i].size()) != cols) {
            throw json::other_error::create(501, "ragged a_hat", nullptr);
          }
          for (int c = 0; c < cols; ++c) e.a_hat(i, c) = rows[i][c];
        }
        return e;
      });
  return est;
}

std::string ScenarioToJson(const byzantine::ByzantineScenario& sc) {
  std::vector<RequestDistribution> greens;
  for (const Menu& menu : sc.green) greens.push_back({{{menu, 1.0}}});
  json j = InstanceFields(sc.m, sc.budgets, greens);
  j["n_green"] = sc.n_green();
  json red = json::array();
  for (const byzantine::RedRequest& r : sc.red) {
    red.push_back({{"t", r.t}, {"menu", MenuToJson(r.menu)}});
  }
  j["red"] = std::move(red);
  j["opt_hat"] = sc.opt_hat;
  j["beta"] = sc.beta;
  return j.dump(1);
}

absl::StatusOr<byzantine::ByzantineScenario> ScenarioFromJson(
    const std::string& text) {
  absl::StatusOr<byzantine::ByzantineScenario> sc =
      Guarded("scenario JSON", [&] {
        const json j = json::parse(text);
        const Instance greens = InstanceFromFields(j);
        byzantine::ByzantineScenario out;
        out.m = greens.m;
        out.budgets = greens.budgets;
        for (const RequestDistribution& dist : greens.distributions) {
          if (dist.types.size() != 1) {
            throw json::other_error::create(
                501, "green requests must have exactly one type", nullptr);
          }
          out.green.push_back(dist.types[0].decisions);
        }
        if (j.contains("n_green") &&
            j.at("n_green").get<int>() != out.n_green()) {
          throw json::other_error::create(
              501, "n_green does not match the distributions", nullptr);
        }
        for (const json& r : j.value("red", json::array())) {
          out.red.push_back(
              {r.at("t").get<double>(), MenuFromJson(r.at("menu"), out.m)});
        }
        out.opt_hat = j.value("opt_hat", 0.0);
        out.beta = j.value("beta", 1.0);
        return out;
      });
  return sc;
}

std::string PlanToJson(const augment::AugmentationPlan& plan) {
  json out = json::array();
  for (const augment::PlanEntry& e : plan.Entries()) {
    out.push_back({{"i", e.i}, {"k", e.k}, {"theta", e.theta}, {"r", e.r}});
  }
  return out.dump(1);
}

absl::StatusOr<augment::AugmentationPlan> PlanFromJson(const std::string& text) {
  absl::StatusOr<augment::AugmentationPlan> plan = Guarded("plan JSON", [&] {
    augment::AugmentationPlan p;
    for (const json& e : json::parse(text)) {
      p.Set(e.at("i").get<int>(), e.at("k").get<int>(),
            e.at("theta").get<int>(), e.at("r").get<double>());
    }
    return p;
  });
  if (!plan.ok()) return plan.status();
  if (absl::Status s = augment::ValidatePlan(*plan); !s.ok()) return s;
  return plan;
}

absl::StatusOr<genlab::GeneratorConfig> GeneratorConfigFromJson(
    const std::string& text) {
  absl::StatusOr<json> j = Guarded("generator JSON",
                                   [&] { return json::parse(text); });
  if (!j.ok()) return j.status();
  return GeneratorFromJsonValue(*j, genlab::GeneratorConfig{}.epsilon);
}

absl::StatusOr<ExperimentConfig> ExperimentConfigFromJson(
    const std::string& text, const std::string& base_dir) {
  absl::StatusOr<json> parsed =
      Guarded("config JSON", [&] { return json::parse(text); });
  if (!parsed.ok()) return parsed.status();
  const json& j = *parsed;
  if (absl::Status s = CheckKeys(
          j,
          {"algorithm", "trials", "seed", "epsilon", "partitions", "benchmark",
           "threads", "instance", "scenario", "plan", "generator"},
          "config");
      !s.ok()) {
    return s;
  }
  ExperimentConfig cfg;
  absl::StatusOr<bool> basics = Guarded("config", [&] {
    cfg.trials = j.value("trials", cfg.trials);
    cfg.seed = j.value("seed", cfg.seed);
    cfg.epsilon = j.value("epsilon", cfg.epsilon);
    cfg.partitions = j.value("partitions", cfg.partitions);
    cfg.benchmark = j.value("benchmark", cfg.benchmark);
    cfg.threads = j.value("threads", cfg.threads);
    return true;
  });
  if (!basics.ok()) return basics.status();
  if (j.contains("algorithm")) {
    if (!j["algorithm"].is_string()) {
      return absl::InvalidArgumentError("algorithm must be a string");
    }
    absl::StatusOr<Algorithm> algo = ParseAlgorithm(j["algorithm"]);
    if (!algo.ok()) return algo.status();
    cfg.algorithm = *algo;
  }
  if (j.contains("generator")) {
    absl::StatusOr<genlab::GeneratorConfig> gen =
        GeneratorFromJsonValue(j["generator"], cfg.epsilon);
    if (!gen.ok()) return gen.status();
    cfg.generator = *gen;
  } else {
    cfg.generator.epsilon = cfg.epsilon;
  }
  auto load = [&](const char* key) -> absl::StatusOr<std::string> {
    if (!j[key].is_string()) {
      return absl::InvalidArgumentError(absl::StrCat(key, " must be a path"));
    }
    return ReadFile(JoinPath(base_dir, j[key].get<std::string>()));
  };
  if (j.contains("instance")) {
    absl::StatusOr<std::string> body = load("instance");
    if (!body.ok()) return body.status();
    absl::StatusOr<Instance> inst = InstanceFromJson(*body);
    if (!inst.ok()) return inst.status();
    cfg.instance = *std::move(inst);
  }
  if (j.contains("scenario")) {
    absl::StatusOr<std::string> body = load("scenario");
    if (!body.ok()) return body.status();
    absl::StatusOr<byzantine::ByzantineScenario> sc = ScenarioFromJson(*body);
    if (!sc.ok()) return sc.status();
    cfg.scenario = *std::move(sc);
  }
  if (j.contains("plan")) {
    absl::StatusOr<std::string> body = load("plan");
    if (!body.ok()) return body.status();
    absl::StatusOr<augment::AugmentationPlan> plan = PlanFromJson(*body);
    if (!plan.ok()) return plan.status();
    cfg.plan = *std::move(plan);
  }
  return cfg;
}

void WriteTraceJsonl(const Trace& trace, std::ostream& out) {
  for (const StepRecord& rec : trace.steps) {
    const json j{{"step", rec.step},
                 {"slot", rec.slot},
                 {"prices", rec.prices},
                 {"chosen", rec.chosen},
                 {"value", rec.value},
                 {"base_value", rec.base_value},
                 {"consumption", rec.consumption},
                 {"cumulative_consumption", rec.cumulative_consumption}};
    out << j.dump() << "\n";
  }
}

absl::StatusOr<std::string> ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

absl::Status WriteFile(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return absl::UnavailableError(absl::StrCat("cannot write ", path));
  out << content;
  out.close();
  if (!out) return absl::UnavailableError(absl::StrCat("write failed: ", path));
  return absl::OkStatus();
}

}  // namespace orabench::harness
