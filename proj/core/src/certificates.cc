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

#include "orabench/pricing/certificates.h"

#include <algorithm>
#include <cmath>

#include "absl/strings/str_cat.h"

namespace orabench::pricing {
namespace {

absl::Status CheckNoRegretInputs(std::span<const double> r, double lambda_init,
                                 double delta) {
  if (!(delta > 0.0 && delta < 0.5)) {
    return absl::InvalidArgumentError(
        absl::StrCat("delta must lie in (0, 1/2), got ", delta));
  }
  if (!(lambda_init > 0.0)) {
    return absl::InvalidArgumentError("lambda_init must be positive");
  }
  for (size_t i = 0; i < r.size(); ++i) {
    if (!(std::abs(r[i]) <= 1.0)) {
      return absl::InvalidArgumentError(
          absl::StrCat("r[", i, "] = ", r[i], " outside [-1, 1]"));
    }
  }
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<InequalityCheck> CheckNoRegretCertificate(
    std::span<const double> r, double lambda_init, double delta, int tau) {
  if (absl::Status s = CheckNoRegretInputs(r, lambda_init, delta); !s.ok()) {
    return s;
  }
  if (tau < 0 || tau > static_cast<int>(r.size())) {
    return absl::InvalidArgumentError(
        absl::StrCat("tau = ", tau, " outside [0, ", r.size(), "]"));
  }
  double prefix = 0.0;
  double lhs = 0.0;
  double positive = 0.0;
  for (int i = 0; i < tau; ++i) {
    const double price = lambda_init * std::exp(delta * prefix);
    lhs += price * r[i];
    positive += price * std::max(r[i], 0.0);
    prefix += r[i];
  }
  InequalityCheck out;
  out.lhs = lhs;
  out.rhs = -2.0 * lambda_init / delta - 4.0 * delta * positive;
  out.holds = out.lhs >= out.rhs - kCertificateSlack;
  return out;
}

absl::StatusOr<double> NoRegretMinSlack(std::span<const double> r,
                                        double lambda_init, double delta) {
  if (absl::Status s = CheckNoRegretInputs(r, lambda_init, delta); !s.ok()) {
    return s;
  }
  double prefix = 0.0;
  double lhs = 0.0;
  double positive = 0.0;
  double worst = 2.0 * lambda_init / delta;
  for (double ri : r) {
    const double price = lambda_init * std::exp(delta * prefix);
    lhs += price * ri;
    positive += price * std::max(ri, 0.0);
    prefix += ri;
    worst = std::min(worst, lhs + 2.0 * lambda_init / delta + 4.0 * delta * positive);
  }
  return worst;
}

std::vector<InequalityCheck> CheckRevenueLossCertificate(
    const Trace& trace, const Matrix& consumption_star,
    const PricingParams& params, double epsilon) {
  const int m = static_cast<int>(params.delta.size());
  std::vector<double> lhs(m, 0.0);
  std::vector<double> spent(m, 0.0);
  for (const StepRecord& rec : trace.steps) {
    if (rec.step >= trace.stop_time) break;
    for (int j = 0; j < m; ++j) {
      const double price = rec.prices[j];
      lhs[j] += price * (consumption_star(rec.step, j) - rec.consumption[j]);
      spent[j] += price * rec.consumption[j];
    }
  }
  std::vector<InequalityCheck> out(m);
  for (int j = 0; j < m; ++j) {
    out[j].lhs = lhs[j];
    out[j].rhs =
        3.0 * params.lambda_init / params.delta[j] + 5.0 * epsilon * spent[j];
    out[j].holds = out[j].lhs <= out[j].rhs + kCertificateSlack;
  }
  return out;
}

double MaxPrefixDeviation(const Matrix& a_hat, const Matrix& a_star, int j) {
  double diff = 0.0;
  double worst = 0.0;
  for (int i = 0; i < a_hat.rows(); ++i) {
    diff += a_hat(i, j) - a_star(i, j);
    worst = std::max(worst, std::abs(diff));
  }
  return worst;
}

double GoodEstimateTolerance(int n, int m, double beta, double epsilon,
                             double budget) {
  return epsilon * epsilon * budget / (16.0 * LogFactor(n, m, beta, epsilon));
}

}  // namespace orabench::pricing
