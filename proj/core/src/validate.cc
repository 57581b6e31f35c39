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

#include "orabench/validate.h"

#include <cmath>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"

namespace orabench {

std::string ToString(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kShape:
      return "shape";
    case ViolationKind::kBudget:
      return "budget";
    case ViolationKind::kNormalization:
      return "normalization";
    case ViolationKind::kProbability:
      return "probability";
    case ViolationKind::kRange:
      return "range";
    case ViolationKind::kNullDecision:
      return "null-decision";
    case ViolationKind::kIds:
      return "ids";
  }
  return "unknown";
}

void ValidateMenu(const Menu& menu, int m, const std::string& where,
                  std::vector<Violation>& out) {
  if (menu.empty()) {
    out.push_back({ViolationKind::kShape, where, "empty decision menu"});
    return;
  }
  if (!menu[0].IsNull() || menu[0].consumption.size() != static_cast<size_t>(m)) {
    out.push_back({ViolationKind::kNullDecision, where,
                   "decision 0 must be the null decision"});
  }
  for (size_t t = 0; t < menu.size(); ++t) {
    const Decision& d = menu[t];
    const std::string at = absl::StrCat(where, "/theta", t);
    if (d.id != static_cast<int>(t)) {
      out.push_back({ViolationKind::kIds, at,
                     absl::StrCat("decision id ", d.id, " at position ", t)});
    }
    if (d.consumption.size() != static_cast<size_t>(m)) {
      out.push_back({ViolationKind::kShape, at,
                     absl::StrCat("consumption has ", d.consumption.size(),
                                  " entries, expected ", m)});
      continue;
    }
    if (!(d.value >= 0.0) || !std::isfinite(d.value)) {
      out.push_back({ViolationKind::kRange, at,
                     absl::StrCat("value ", d.value, " is not a finite "
                                  "nonnegative number")});
    }
    for (int j = 0; j < m; ++j) {
      const double a = d.consumption[j];
      if (!(a >= 0.0 && a <= 1.0)) {
        out.push_back({ViolationKind::kRange, at,
                       absl::StrCat("consumption[", j, "] = ", a,
                                    " outside [0, 1]")});
      }
    }
  }
}

std::vector<Violation> ValidateInstance(const Instance& inst) {
  std::vector<Violation> out;
  if (inst.m < 1) out.push_back({ViolationKind::kShape, "instance", "m < 1"});
  if (inst.n() < 1) out.push_back({ViolationKind::kShape, "instance", "n < 1"});
  if (inst.budgets.size() != static_cast<size_t>(std::max(inst.m, 0))) {
    out.push_back({ViolationKind::kShape, "budgets",
                   absl::StrCat(inst.budgets.size(), " budgets for m = ",
                                inst.m)});
  }
  for (size_t j = 0; j < inst.budgets.size(); ++j) {
    if (!(inst.budgets[j] > 0.0) || !std::isfinite(inst.budgets[j])) {
      out.push_back({ViolationKind::kBudget, absl::StrCat("budgets[", j, "]"),
                     absl::StrCat("budget ", inst.budgets[j],
                                  " is not positive")});
    }
  }
  if (inst.m < 1) return out;
  for (int i = 0; i < inst.n(); ++i) {
    const RequestDistribution& dist = inst.distributions[i];
    const std::string where_i = absl::StrCat("request", i);
    if (dist.types.empty()) {
      out.push_back({ViolationKind::kShape, where_i, "no request types"});
      continue;
    }
    double total = 0.0;
    for (size_t k = 0; k < dist.types.size(); ++k) {
      const RequestType& type = dist.types[k];
      const std::string where_k = absl::StrCat(where_i, "/type", k);
      if (!(type.probability > 0.0 && type.probability <= 1.0)) {
        out.push_back({ViolationKind::kProbability, where_k,
                       absl::StrCat("probability ", type.probability,
                                    " outside (0, 1]")});
      }
      total += type.probability;
      ValidateMenu(type.decisions, inst.m, where_k, out);
    }
    if (std::abs(total - 1.0) > kProbabilityTolerance) {
      out.push_back({ViolationKind::kNormalization, where_i,
                     absl::StrCat("type probabilities sum to ", total)});
    }
  }
  return out;
}

absl::Status CheckInstance(const Instance& inst) {
  const std::vector<Violation> violations = ValidateInstance(inst);
  if (violations.empty()) return absl::OkStatus();
  std::vector<std::string> lines;
  for (size_t v = 0; v < violations.size() && v < 5; ++v) {
    lines.push_back(absl::StrCat(ToString(violations[v].kind), " at ",
                                 violations[v].where, ": ",
                                 violations[v].message));
  }
  return absl::InvalidArgumentError(absl::StrCat(
      "invalid instance (", violations.size(), " violations): ",
      absl::StrJoin(lines, "; ")));
}

}  // namespace orabench
