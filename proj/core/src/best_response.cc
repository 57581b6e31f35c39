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

#include "orabench/best_response.h"

namespace orabench {

double Utility(const Decision& d, std::span<const double> prices,
               double bonus) {
  double cost = 0.0;
  for (size_t j = 0; j < prices.size(); ++j) cost += prices[j] * d.consumption[j];
  return d.value + bonus - cost;
}

int BestResponseIndex(std::span<const Decision> menu,
                      std::span<const double> prices,
                      std::span<const double> bonus) {
  int best = 0;
  double best_utility = Utility(menu[0], prices, bonus.empty() ? 0.0 : bonus[0]);
  for (size_t t = 1; t < menu.size(); ++t) {
    const double u = Utility(menu[t], prices, bonus.empty() ? 0.0 : bonus[t]);
    if (u > best_utility) {
      best_utility = u;
      best = static_cast<int>(t);
    }
  }
  return best;
}

const Decision& BestResponse(const RealizedRequest& request,
                             std::span<const double> prices) {
  return request.decisions[BestResponseIndex(request.decisions, prices)];
}

}  // namespace orabench
