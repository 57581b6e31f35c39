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

#include "orabench/harness/concentration.h"

#include <cmath>

#include "absl/strings/str_cat.h"

namespace orabench::harness {

absl::StatusOr<double> HoeffdingBound(int64_t n, double a, double b,
                                      double epsilon) {
  if (n < 1 || !(b > a) || !(epsilon > 0.0)) {
    return absl::InvalidArgumentError(
        "hoeffding needs N >= 1, b > a and eps > 0");
  }
  const double w = b - a;
  return 2.0 * std::exp(-2.0 * n * epsilon * epsilon / (w * w));
}

absl::StatusOr<double> BernsteinBound(double sigma2, double m_bound,
                                      double epsilon) {
  if (!(sigma2 >= 0.0) || !(m_bound > 0.0) || !(epsilon >= 0.0)) {
    return absl::InvalidArgumentError(
        "bernstein needs sigma2 >= 0, M > 0 and eps >= 0");
  }
  const double denom = sigma2 + m_bound * epsilon / 3.0;
  if (denom == 0.0) return 1.0;
  return std::exp(-(epsilon * epsilon / 2.0) / denom);
}

absl::StatusOr<double> BernsteinSworBound(int64_t u, int64_t v, double m_bound,
                                          double mu, double tau) {
  if (u < 1 || v < 1 || v > u) {
    return absl::InvalidArgumentError(
        absl::StrCat("sampling without replacement needs 1 <= v <= u, got v = ",
                     v, ", u = ", u));
  }
  if (!(m_bound > 0.0) || !(mu >= 0.0 && mu <= m_bound) || !(tau > 0.0)) {
    return absl::InvalidArgumentError(
        "sampling without replacement needs M > 0, mu in [0, M], tau > 0");
  }
  return 2.0 * std::exp(-tau * tau / (m_bound * (4.0 * v * mu + tau)));
}

absl::StatusOr<double> ConcentrationBound(BoundKind kind,
                                          const BoundParams& p) {
  switch (kind) {
    case BoundKind::kHoeffding:
      return HoeffdingBound(p.n, p.a, p.b, p.epsilon);
    case BoundKind::kBernstein:
      return BernsteinBound(p.sigma2, p.m_bound, p.epsilon);
    case BoundKind::kBernsteinSwor:
      return BernsteinSworBound(p.u, p.v, p.m_bound, p.mu, p.tau);
  }
  return absl::InvalidArgumentError("unknown bound kind");
}

absl::StatusOr<BoundKind> ParseBoundKind(const std::string& name) {
  if (name == "hoeffding") return BoundKind::kHoeffding;
  if (name == "bernstein") return BoundKind::kBernstein;
  if (name == "bernstein_swor") return BoundKind::kBernsteinSwor;
  return absl::InvalidArgumentError(absl::StrCat("unknown bound '", name, "'"));
}

absl::StatusOr<int64_t> HoeffdingTrials(double a, double b, double epsilon,
                                        double failure) {
  if (!(b > a) || !(epsilon > 0.0) || !(failure > 0.0 && failure < 2.0)) {
    return absl::InvalidArgumentError("bad Hoeffding trial-count arguments");
  }
  const double w = b - a;
  return static_cast<int64_t>(
      std::ceil(w * w * std::log(2.0 / failure) / (2.0 * epsilon * epsilon)));
}

}  // namespace orabench::harness
