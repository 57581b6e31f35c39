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

#ifndef ORABENCH_BEST_RESPONSE_H_
#define ORABENCH_BEST_RESPONSE_H_

#include <span>

#include "orabench/types.h"

namespace orabench {

// value - <prices, consumption>, plus an optional additive bonus.
double Utility(const Decision& d, std::span<const double> prices,
               double bonus = 0.0);

// Index into `menu` of argmax_theta (v(theta) + bonus(theta) - <prices,
// a(theta)>). Ties go to the smallest index. `bonus` is either empty or has
// one entry per menu item. The null decision keeps the maximum >= 0.
int BestResponseIndex(std::span<const Decision> menu,
                      std::span<const double> prices,
                      std::span<const double> bonus = {});

const Decision& BestResponse(const RealizedRequest& request,
                             std::span<const double> prices);

}  // namespace orabench

#endif  // ORABENCH_BEST_RESPONSE_H_
