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

#ifndef ORABENCH_TYPES_H_
#define ORABENCH_TYPES_H_

#include <cstdint>
#include <span>
#include <vector>

namespace orabench {

// Normalization tolerance for type probabilities.
inline constexpr double kProbabilityTolerance = 1e-12;
// Row slack allowed on every returned LP solution.
inline constexpr double kFeasibilityTolerance = 1e-9;
// Absolute objective tolerance of the LP solvers.
inline constexpr double kObjectiveTolerance = 1e-7;

// One entry of a request's decision menu. Id 0 is always the null decision
// (value 0, zero consumption).
struct Decision {
  int id = 0;
  double value = 0.0;
  std::vector<double> consumption;

  bool IsNull() const;
  bool operator==(const Decision&) const = default;
};

using Menu = std::vector<Decision>;

// Builds the null decision for `m` resources.
Decision NullDecision(int m);

// Builds a menu {null, d_1, ..., d_k} from (value, consumption) pairs. Ids are
// assigned consecutively.
struct DecisionSpec {
  double value = 0.0;
  std::vector<double> consumption;
};
Menu MakeMenu(int m, std::span<const DecisionSpec> nonnull);

struct RequestType {
  Menu decisions;
  double probability = 1.0;
};

struct RequestDistribution {
  std::vector<RequestType> types;
};

struct Instance {
  int m = 0;
  std::vector<double> budgets;
  std::vector<RequestDistribution> distributions;

  int n() const { return static_cast<int>(distributions.size()); }
};

// A draw gamma_i ~ D_i: the step, which type was realized and its menu.
struct RealizedRequest {
  int step = 0;
  int type_index = 0;
  Menu decisions;
};

// Dense row-major matrix; used for the n x m consumption tables.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  double& operator()(int r, int c) { return data_[Index(r, c)]; }
  double operator()(int r, int c) const { return data_[Index(r, c)]; }

  std::span<double> row(int r) {
    return {data_.data() + static_cast<size_t>(r) * cols_,
            static_cast<size_t>(cols_)};
  }
  std::span<const double> row(int r) const {
    return {data_.data() + static_cast<size_t>(r) * cols_,
            static_cast<size_t>(cols_)};
  }

  const std::vector<double>& data() const { return data_; }

  bool operator==(const Matrix&) const = default;

 private:
  size_t Index(int r, int c) const {
    return static_cast<size_t>(r) * cols_ + c;
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

// Per-step execution record of a pricing run.
struct StepRecord {
  int step = 0;
  // Slot index for Byzantine runs; equals `step` for prophet runs.
  int64_t slot = 0;
  std::vector<double> prices;
  int chosen = 0;
  // Value credited to the algorithm (augmented value in augmented runs).
  double value = 0.0;
  // Unperturbed value of the chosen decision.
  double base_value = 0.0;
  std::vector<double> consumption;
  std::vector<double> cumulative_consumption;

  bool operator==(const StepRecord&) const = default;
};

struct Trace {
  std::vector<StepRecord> steps;
  // Number of steps processed before stopping (tau).
  int stop_time = 0;
  bool terminated_early = false;
  double total_value = 0.0;
  double base_total_value = 0.0;
  // Times the hard budget guard replaced a decision by the null decision.
  int guard_activations = 0;

  bool operator==(const Trace&) const = default;
};

}  // namespace orabench

#endif  // ORABENCH_TYPES_H_
