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

#include "orabench/types.h"

#include <algorithm>

namespace orabench {

bool Decision::IsNull() const {
  return value == 0.0 &&
         std::all_of(consumption.begin(), consumption.end(),
                     [](double a) { return a == 0.0; });
}

Decision NullDecision(int m) {
  return Decision{0, 0.0, std::vector<double>(m, 0.0)};
}

Menu MakeMenu(int m, std::span<const DecisionSpec> nonnull) {
  Menu menu;
  menu.reserve(nonnull.size() + 1);
  menu.push_back(NullDecision(m));
  for (const DecisionSpec& spec : nonnull) {
    menu.push_back(Decision{static_cast<int>(menu.size()), spec.value,
                            spec.consumption});
  }
  return menu;
}

}  // namespace orabench
