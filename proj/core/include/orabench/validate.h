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

#ifndef ORABENCH_VALIDATE_H_
#define ORABENCH_VALIDATE_H_

#include <string>
#include <vector>

#include "absl/status/status.h"
#include "orabench/types.h"

namespace orabench {

enum class ViolationKind {
  kShape,          // wrong dimensions, empty lists, n or m < 1
  kBudget,         // nonpositive budget
  kNormalization,  // type probabilities do not sum to 1
  kProbability,    // probability outside (0, 1]
  kRange,          // consumption outside [0, 1] or negative value
  kNullDecision,   // decision 0 missing or not null
  kIds,            // decision ids not consecutive from 0
};

struct Violation {
  ViolationKind kind;
  std::string where;
  std::string message;
};

// Menu-level checks shared by instances and scenarios.
void ValidateMenu(const Menu& menu, int m, const std::string& where,
                  std::vector<Violation>& out);

// Returns every invariant violation of `inst`; empty iff the instance is
// well formed.
std::vector<Violation> ValidateInstance(const Instance& inst);

// OkStatus when ValidateInstance is empty, otherwise InvalidArgument listing
// the first few violations.
absl::Status CheckInstance(const Instance& inst);

std::string ToString(ViolationKind kind);

}  // namespace orabench

#endif  // ORABENCH_VALIDATE_H_
