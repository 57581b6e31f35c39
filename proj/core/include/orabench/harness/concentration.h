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

#ifndef ORABENCH_HARNESS_CONCENTRATION_H_
#define ORABENCH_HARNESS_CONCENTRATION_H_

#include <cstdint>
#include <string>

#include "absl/status/statusor.h"

namespace orabench::harness {

enum class BoundKind { kHoeffding, kBernstein, kBernsteinSwor };

struct BoundParams {
  // Hoeffding: N i.i.d. samples in [a, b], deviation eps of the mean.
  int64_t n = 0;
  double a = 0.0;
  double b = 1.0;
  double epsilon = 0.0;
  // Bernstein: sum of independent mean-zero terms with |X_i| <= M and total
  // variance sigma2, one-sided deviation epsilon.
  double sigma2 = 0.0;
  double m_bound = 1.0;
  // Sampling without replacement: v of u values in [0, M] with mean mu,
  // deviation tau of the sample sum.
  int64_t u = 0;
  int64_t v = 0;
  double mu = 0.0;
  double tau = 0.0;
};

// 2 exp(-2 N eps^2 / (b - a)^2).
absl::StatusOr<double> HoeffdingBound(int64_t n, double a, double b,
                                      double epsilon);

// exp(-(eps^2 / 2) / (sigma2 + M eps / 3)).
absl::StatusOr<double> BernsteinBound(double sigma2, double m_bound,
                                      double epsilon);

// 2 exp(-tau^2 / (M (4 v mu + tau))).
absl::StatusOr<double> BernsteinSworBound(int64_t u, int64_t v, double m_bound,
                                          double mu, double tau);

absl::StatusOr<double> ConcentrationBound(BoundKind kind,
                                          const BoundParams& params);

absl::StatusOr<BoundKind> ParseBoundKind(const std::string& name);

// Smallest N with HoeffdingBound(N, a, b, eps) <= failure.
absl::StatusOr<int64_t> HoeffdingTrials(double a, double b, double epsilon,
                                        double failure);

}  // namespace orabench::harness

#endif  // ORABENCH_HARNESS_CONCENTRATION_H_
