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

#ifndef ORABENCH_PRICING_CERTIFICATES_H_
#define ORABENCH_PRICING_CERTIFICATES_H_

#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "orabench/pricing/exponential_pricing.h"
#include "orabench/types.h"

namespace orabench::pricing {

inline constexpr double kCertificateSlack = 1e-9;

struct InequalityCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

// Exponential prices against rewards r in [-1, 1]:
//   lambda*_i = lambda_init * exp(delta * sum_{l < i} r_l)
//   lhs = sum_{i <= tau} lambda*_i r_i
//   rhs = -2 lambda_init / delta - 4 delta sum_{i <= tau} lambda*_i max(r_i, 0)
// holds iff lhs >= rhs - 1e-9. `tau` counts steps (0 <= tau <= r.size()).
// Rejects delta outside (0, 1/2) and any |r_i| > 1.
absl::StatusOr<InequalityCheck> CheckNoRegretCertificate(
    std::span<const double> r, double lambda_init, double delta, int tau);

// min over tau in [1, r.size()] of lhs - rhs, evaluated in one pass.
absl::StatusOr<double> NoRegretMinSlack(std::span<const double> r,
                                        double lambda_init, double delta);

// Per resource j, over the steps of `trace` (prices lambda_{i,j}, consumption
// a^ALG_{i,j}) and the reference consumption a*_{i,j}:
//   lhs = sum_i lambda_{i,j} (a*_{i,j} - a^ALG_{i,j})
//   rhs = 3 lambda_init / delta_j + 5 eps sum_i lambda_{i,j} a^ALG_{i,j}
// holds iff lhs <= rhs + 1e-9. A violation means the estimates were not good
// with respect to a*.
std::vector<InequalityCheck> CheckRevenueLossCertificate(
    const Trace& trace, const Matrix& consumption_star,
    const PricingParams& params, double epsilon);

// max_i |sum_{l <= i} a_hat_{l,j} - sum_{l <= i} a*_{l,j}| for resource j.
double MaxPrefixDeviation(const Matrix& a_hat, const Matrix& a_star, int j);

// The prefix accuracy eps^2 B_j / (16 ln(n m beta / eps)) that good estimates
// must meet.
double GoodEstimateTolerance(int n, int m, double beta, double epsilon,
                             double budget);

}  // namespace orabench::pricing

#endif  // ORABENCH_PRICING_CERTIFICATES_H_
