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

#include "orabench/genlab/generators.h"

#include <algorithm>
#include <cmath>

#include "absl/strings/str_cat.h"
#include "orabench/validate.h"

namespace orabench::genlab {
namespace {

constexpr double kJitter = 1e-9;

template <typename E, size_t N>
absl::StatusOr<E> ParseName(std::string_view name,
                            const std::pair<const char*, E> (&table)[N],
                            std::string_view what) {
  for (const auto& [key, value] : table) {
    if (name == key) return value;
  }
  return absl::InvalidArgumentError(
      absl::StrCat("unknown ", std::string(what), " '", std::string(name), "'"));
}

template <typename E, size_t N>
std::string NameOf(E value, const std::pair<const char*, E> (&table)[N]) {
  for (const auto& [key, v] : table) {
    if (v == value) return key;
  }
  return "unknown";
}

constexpr std::pair<const char*, Family> kFamilies[] = {
    {"iid", Family::kIid},
    {"nonidentical", Family::kNonidentical},
    {"decoy", Family::kDecoy},
    {"hard_lower_bound", Family::kHardLowerBound},
    {"byzantine", Family::kByzantine},
    {"augmentation", Family::kAugmentation},
};
constexpr std::pair<const char*, BudgetRule> kBudgetRules[] = {
    {"fixed", BudgetRule::kFixed},
    {"pricing", BudgetRule::kPricing},
    {"minimal", BudgetRule::kMinimal},
    {"byzantine", BudgetRule::kByzantine},
};
constexpr std::pair<const char*, RedPreset> kRedPresets[] = {
    {"front_loaded", RedPreset::kFrontLoaded},
    {"value_decoys", RedPreset::kValueDecoys},
    {"budget_burners", RedPreset::kBudgetBurners},
    {"uniform_red", RedPreset::kUniformRed},
};
constexpr std::pair<const char*, AugPreset> kAugPresets[] = {
    {"zero", AugPreset::kZero},
    {"uniform_boost", AugPreset::kUniformBoost},
    {"misleading", AugPreset::kMisleading},
    {"spike", AugPreset::kSpike},
};

// Shared state of one generation call.
class MenuFactory {
 public:
  MenuFactory(const GeneratorConfig& cfg, RandomStream& rng)
      : cfg_(cfg), rng_(rng) {}

  double Jittered(double value) { return value + kJitter * counter_++; }

  std::vector<double> SparseConsumption() {
    std::vector<double> a(cfg_.m, 0.0);
    bool any = false;
    for (double& x : a) {
      if (rng_.NextBernoulli(cfg_.sparsity)) {
        x = 1.0 - rng_.NextUniform();  // (0, 1]
        any = true;
      }
    }
    if (!any) a[rng_.NextBelow(cfg_.m)] = 1.0 - rng_.NextUniform();
    return a;
  }

  Menu RandomMenu() {
    std::vector<DecisionSpec> specs(cfg_.menu_size);
    for (DecisionSpec& s : specs) {
      s.value = Jittered(rng_.NextUniform(cfg_.value_min, cfg_.value_max));
      s.consumption = SparseConsumption();
    }
    return MakeMenu(cfg_.m, specs);
  }

  RequestDistribution RandomDistribution() {
    const int k = 1 + static_cast<int>(rng_.NextBelow(cfg_.k_max));
    RequestDistribution dist;
    dist.types.resize(k);
    std::vector<double> w(k);
    double total = 0.0;
    for (double& x : w) {
      x = rng_.NextUniform(0.1, 1.0);
      total += x;
    }
    double assigned = 0.0;
    for (int t = 0; t < k; ++t) {
      dist.types[t].decisions = RandomMenu();
      if (t + 1 < k) {
        dist.types[t].probability = w[t] / total;
        assigned += dist.types[t].probability;
      } else {
        dist.types[t].probability = 1.0 - assigned;
      }
    }
    return dist;
  }

  Menu SingleDecision(double value, std::vector<double> a) {
    const DecisionSpec spec{Jittered(value), std::move(a)};
    return MakeMenu(cfg_.m, std::span<const DecisionSpec>(&spec, 1));
  }

 private:
  const GeneratorConfig& cfg_;
  RandomStream& rng_;
  int64_t counter_ = 0;
};

RequestDistribution Deterministic(Menu menu) {
  RequestDistribution dist;
  dist.types.push_back({std::move(menu), 1.0});
  return dist;
}

absl::StatusOr<Instance> BuildProphet(const GeneratorConfig& cfg, int n,
                                      Family family, RandomStream& rng) {
  Instance inst;
  inst.m = cfg.m;
  absl::StatusOr<double> budget = BudgetFor(cfg, n);
  if (!budget.ok()) return budget.status();
  inst.budgets.assign(cfg.m, *budget);
  MenuFactory factory(cfg, rng);
  inst.distributions.reserve(n);
  switch (family) {
    case Family::kIid: {
      const RequestDistribution shared = factory.RandomDistribution();
      inst.distributions.assign(n, shared);
      break;
    }
    case Family::kDecoy: {
      for (int i = 0; i < n; ++i) {
        std::vector<double> a(cfg.m, 0.0);
        a[i % cfg.m] = 1.0;
        const bool cheap = i < n / 2;
        const double lo = cheap ? cfg.value_min : 0.8 * cfg.value_max;
        const double hi = cheap ? 1.5 * cfg.value_min : cfg.value_max;
        inst.distributions.push_back(Deterministic(
            factory.SingleDecision(rng.NextUniform(lo, hi), std::move(a))));
      }
      break;
    }
    default:
      for (int i = 0; i < n; ++i) {
        inst.distributions.push_back(factory.RandomDistribution());
      }
      break;
  }
  return inst;
}

}  // namespace

absl::StatusOr<Family> ParseFamily(std::string_view name) {
  return ParseName(name, kFamilies, "family");
}
absl::StatusOr<BudgetRule> ParseBudgetRule(std::string_view name) {
  return ParseName(name, kBudgetRules, "budget rule");
}
absl::StatusOr<RedPreset> ParseRedPreset(std::string_view name) {
  return ParseName(name, kRedPresets, "red preset");
}
absl::StatusOr<AugPreset> ParseAugPreset(std::string_view name) {
  return ParseName(name, kAugPresets, "augmentation preset");
}
std::string ToString(Family f) { return NameOf(f, kFamilies); }
std::string ToString(BudgetRule r) { return NameOf(r, kBudgetRules); }
std::string ToString(RedPreset p) { return NameOf(p, kRedPresets); }
std::string ToString(AugPreset p) { return NameOf(p, kAugPresets); }

absl::Status ValidateConfig(const GeneratorConfig& cfg) {
  if (cfg.family == Family::kHardLowerBound) {
    if (cfg.z < 1 || cfg.z > 20 || cfg.hard_budget < 1) {
      return absl::InvalidArgumentError("hard instance needs z in [1, 20], B >= 1");
    }
    return absl::OkStatus();
  }
  if (cfg.n < 1 || cfg.m < 1) {
    return absl::InvalidArgumentError("n and m must be at least 1");
  }
  if (!(cfg.epsilon > 0.0 && cfg.epsilon <= 0.5)) {
    return absl::InvalidArgumentError("epsilon must lie in (0, 1/2]");
  }
  if (cfg.k_max < 1 || cfg.menu_size < 1) {
    return absl::InvalidArgumentError("k_max and menu_size must be >= 1");
  }
  if (!(cfg.value_min >= 0.0 && cfg.value_max >= cfg.value_min)) {
    return absl::InvalidArgumentError("need 0 <= value_min <= value_max");
  }
  if (!(cfg.sparsity > 0.0 && cfg.sparsity <= 1.0)) {
    return absl::InvalidArgumentError("sparsity must lie in (0, 1]");
  }
  if (!(cfg.budget_multiplier > 0.0)) {
    return absl::InvalidArgumentError("budget_multiplier must be positive");
  }
  if (cfg.budget_rule == BudgetRule::kFixed && !(cfg.budget > 0.0)) {
    return absl::InvalidArgumentError("fixed budget must be positive");
  }
  if (!(cfg.red_fraction >= 0.0 && cfg.red_fraction < 1.0)) {
    return absl::InvalidArgumentError("red fraction must lie in [0, 1)");
  }
  if (!(cfg.aug_strength >= 0.0)) {
    return absl::InvalidArgumentError("augmentation strength must be >= 0");
  }
  return absl::OkStatus();
}

absl::StatusOr<double> BudgetFor(const GeneratorConfig& cfg, int n) {
  const double eps = cfg.epsilon;
  const double nm = static_cast<double>(std::max(n, 1)) * cfg.m;
  double base = 0.0;
  switch (cfg.budget_rule) {
    case BudgetRule::kFixed:
      base = cfg.budget;
      break;
    case BudgetRule::kPricing:
      base = std::ceil(32.0 * std::log(nm / eps) / (eps * eps));
      break;
    case BudgetRule::kMinimal:
      base = std::ceil(16.0 * std::log(nm / eps) / eps);
      break;
    case BudgetRule::kByzantine:
      base = std::ceil(20.0 * std::log(cfg.m / eps) / (eps * eps));
      break;
  }
  const double b = base * cfg.budget_multiplier;
  if (!(b > 0.0)) return absl::InvalidArgumentError("budget rule gave B <= 0");
  return b;
}

absl::StatusOr<Instance> GenProphetInstance(const GeneratorConfig& cfg) {
  if (absl::Status s = ValidateConfig(cfg); !s.ok()) return s;
  switch (cfg.family) {
    case Family::kIid:
    case Family::kNonidentical:
    case Family::kDecoy:
    case Family::kAugmentation:
      break;
    default:
      return absl::InvalidArgumentError(absl::StrCat(
          "family ", ToString(cfg.family), " is not a prophet family"));
  }
  RandomStream rng(cfg.seed);
  absl::StatusOr<Instance> inst = BuildProphet(cfg, cfg.n, cfg.family, rng);
  if (!inst.ok()) return inst.status();
  if (absl::Status s = CheckInstance(*inst); !s.ok()) return s;
  return inst;
}

absl::StatusOr<HardInstance> GenHardInstance(int z, int B,
                                             bool round_group_sizes) {
  if (z < 1 || z > 20 || B < 1) {
    return absl::InvalidArgumentError("hard instance needs z in [1, 20], B >= 1");
  }
  const double root = std::sqrt(static_cast<double>(B) / z);
  const bool integral = B % z == 0 && (2 * B) % z == 0 &&
                        std::abs(root - std::round(root)) < 1e-12;
  if (!integral && !(round_group_sizes && B % z == 0)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "sqrt(B/z), 2B/z and B/z must be integers; got z = ", z, ", B = ", B));
  }
  HardInstance out;
  out.group1 = static_cast<int>(std::lround(root));
  out.group2 = 2 * B / z;
  out.group3 = B / z;
  out.epsilon = std::sqrt(static_cast<double>(z) / B);
  if (out.group1 < 1) {
    return absl::InvalidArgumentError("group 1 would be empty");
  }

  const int m = 1 << z;
  Instance& inst = out.instance;
  inst.m = m;
  inst.budgets.assign(m, static_cast<double>(B));
  auto bundle = [m](int l, bool bit_set) {
    std::vector<double> a(m, 0.0);
    for (int item = 0; item < m; ++item) {
      if (((item >> l) & 1) == (bit_set ? 1 : 0)) a[item] = 1.0;
    }
    return a;
  };
  auto single = [m](double value, std::vector<double> a) {
    const DecisionSpec spec{value, std::move(a)};
    return MakeMenu(m, std::span<const DecisionSpec>(&spec, 1));
  };
  for (int l = 0; l < z; ++l) {
    for (int c = 0; c < out.group1; ++c) {
      inst.distributions.push_back(Deterministic(single(2.0, bundle(l, true))));
    }
  }
  for (int l = 0; l < z; ++l) {
    for (int c = 0; c < out.group2; ++c) {
      RequestDistribution dist;
      dist.types.push_back({single(1.0, bundle(l, true)), 0.5});
      dist.types.push_back({single(3.0, bundle(l, true)), 0.5});
      inst.distributions.push_back(std::move(dist));
    }
  }
  for (int l = 0; l < z; ++l) {
    for (int c = 0; c < out.group3; ++c) {
      inst.distributions.push_back(Deterministic(single(4.0, bundle(l, false))));
    }
  }
  return out;
}

absl::StatusOr<byzantine::ByzantineScenario> GenByzantineScenario(
    const GeneratorConfig& cfg) {
  if (absl::Status s = ValidateConfig(cfg); !s.ok()) return s;
  if (cfg.family != Family::kByzantine) {
    return absl::InvalidArgumentError(absl::StrCat(
        "scenarios need the byzantine family, got ", ToString(cfg.family)));
  }
  const int n_red = static_cast<int>(std::floor(cfg.red_fraction * cfg.n));
  const int n_green = cfg.n - n_red;
  byzantine::ByzantineScenario sc;
  sc.m = cfg.m;
  absl::StatusOr<double> budget = BudgetFor(cfg, cfg.n);
  if (!budget.ok()) return budget.status();
  sc.budgets.assign(cfg.m, *budget);

  // Reds are fixed first, from their own stream.
  RandomStream red_rng(DeriveSeed(cfg.seed, 2));
  MenuFactory red_factory(cfg, red_rng);
  for (int r = 0; r < n_red; ++r) {
    byzantine::RedRequest red;
    switch (cfg.red_preset) {
      case RedPreset::kFrontLoaded:
        red.t = r * 1e-6;
        red.menu = red_factory.RandomMenu();
        break;
      case RedPreset::kValueDecoys: {
        red.t = red_rng.NextUniform(0.0, 0.25);
        std::vector<double> a(cfg.m, 0.0);
        a[0] = 1.0;
        red.menu = red_factory.SingleDecision(2.0 * cfg.value_max, std::move(a));
        break;
      }
      case RedPreset::kBudgetBurners: {
        red.t = red_rng.NextUniform();
        const DecisionSpec spec{0.0, std::vector<double>(cfg.m, 1.0)};
        red.menu = MakeMenu(cfg.m, std::span<const DecisionSpec>(&spec, 1));
        break;
      }
      case RedPreset::kUniformRed:
        red.t = red_rng.NextUniform();
        red.menu = red_factory.RandomMenu();
        break;
    }
    sc.red.push_back(std::move(red));
  }

  if (n_green > 0) {
    RandomStream green_rng(DeriveSeed(cfg.seed, 1));
    absl::StatusOr<Instance> inst =
        BuildProphet(cfg, n_green, Family::kNonidentical, green_rng);
    if (!inst.ok()) return inst.status();
    RandomStream draw(DeriveSeed(cfg.seed, 3));
    for (RealizedRequest& req : SampleRealization(*inst, draw)) {
      sc.green.push_back(std::move(req.decisions));
    }
  }
  absl::StatusOr<byzantine::GreenBenchmark> bench =
      byzantine::EvaluateGreenBenchmark(sc);
  if (!bench.ok()) return bench.status();
  sc.opt_hat = bench->value;
  sc.beta = 1.0;
  if (absl::Status s = byzantine::ValidateScenario(sc); !s.ok()) return s;
  return sc;
}

absl::StatusOr<augment::AugmentationPlan> GenAugmentationPlan(
    const Instance& inst, AugPreset preset, double strength,
    RandomStream& rng) {
  if (!(strength >= 0.0)) {
    return absl::InvalidArgumentError("augmentation strength must be >= 0");
  }
  augment::AugmentationPlan plan;
  switch (preset) {
    case AugPreset::kZero:
      break;
    case AugPreset::kUniformBoost:
      for (int i = 0; i < inst.n(); ++i) {
        const auto& types = inst.distributions[i].types;
        for (int k = 0; k < static_cast<int>(types.size()); ++k) {
          for (const Decision& d : types[k].decisions) {
            if (!d.IsNull()) plan.Set(i, k, d.id, strength);
          }
        }
      }
      break;
    case AugPreset::kMisleading:
      // Boosts the least value-dense option of each type, with a random
      // scale per type so the boost is not uniform.
      for (int i = 0; i < inst.n(); ++i) {
        const auto& types = inst.distributions[i].types;
        for (int k = 0; k < static_cast<int>(types.size()); ++k) {
          int worst = -1;
          double worst_density = 0.0;
          double top = 0.0;
          for (const Decision& d : types[k].decisions) {
            if (d.IsNull()) continue;
            double used = 1e-12;
            for (double a : d.consumption) used += a;
            const double density = d.value / used;
            if (worst < 0 || density < worst_density) {
              worst = d.id;
              worst_density = density;
            }
            top = std::max(top, d.value);
          }
          if (worst >= 0) {
            plan.Set(i, k, worst, strength * top * rng.NextUniform(0.5, 1.5));
          }
        }
      }
      break;
    case AugPreset::kSpike:
      if (inst.n() > 0 && inst.distributions[0].types[0].decisions.size() > 1) {
        plan.Set(0, 0, 1, 1e6 * strength);
      }
      break;
  }
  return plan;
}

}  // namespace orabench::genlab
