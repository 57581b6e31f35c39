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

#include "orabench/lp/dense_simplex.h"

#include <algorithm>
#include <cmath>

#include "absl/strings/str_cat.h"

namespace orabench::lp {
namespace {

constexpr double kPivotTolerance = 1e-11;
constexpr double kRatioTieTolerance = 1e-12;

class RevisedSimplex {
 public:
  explicit RevisedSimplex(const DenseLp& lp)
      : lp_(lp),
        rows_(lp.rows),
        cols_(lp.cols),
        binv_(static_cast<size_t>(rows_) * rows_, 0.0),
        basis_(rows_),
        is_basic_(cols_ + rows_, false),
        x_basic_(lp.b),
        duals_(rows_, 0.0),
        column_(rows_, 0.0) {
    for (int r = 0; r < rows_; ++r) {
      Binv(r, r) = 1.0;
      basis_[r] = cols_ + r;
      is_basic_[cols_ + r] = true;
    }
    double scale = 1.0;
    for (double c : lp.c) scale = std::max(scale, std::abs(c));
    optimality_tolerance_ = 1e-10 * scale;
  }

  absl::StatusOr<DenseLpSolution> Run() {
    const int cap = 50 * (rows_ + cols_);
    int iterations = 0;
    while (true) {
      ComputeDuals();
      const int entering = ChooseEntering();
      if (entering < 0) break;
      if (iterations >= cap) {
        return absl::InternalError(absl::StrCat(
            "numerical-failure: simplex exceeded ", cap, " pivots"));
      }
      LoadColumn(entering);
      const int leaving_row = ChooseLeavingRow();
      if (leaving_row < 0) {
        return absl::InternalError("unbounded packing LP");
      }
      Pivot(entering, leaving_row);
      ++iterations;
    }
    return Extract(iterations);
  }

 private:
  double& Binv(int r, int c) { return binv_[static_cast<size_t>(r) * rows_ + c]; }

  double Cost(int var) const { return var < cols_ ? lp_.c[var] : 0.0; }

  void ComputeDuals() {
    std::fill(duals_.begin(), duals_.end(), 0.0);
    for (int r = 0; r < rows_; ++r) {
      const double cb = Cost(basis_[r]);
      if (cb == 0.0) continue;
      const double* row = &binv_[static_cast<size_t>(r) * rows_];
      for (int k = 0; k < rows_; ++k) duals_[k] += cb * row[k];
    }
  }

  double ReducedCost(int var) const {
    if (var >= cols_) return -duals_[var - cols_];
    double d = lp_.c[var];
    for (int k = 0; k < rows_; ++k) d -= duals_[k] * lp_.A(k, var);
    return d;
  }

  // Bland: lowest-index improving variable.
  int ChooseEntering() const {
    for (int var = 0; var < cols_ + rows_; ++var) {
      if (is_basic_[var]) continue;
      if (ReducedCost(var) > optimality_tolerance_) return var;
    }
    return -1;
  }

  void LoadColumn(int var) {
    for (int r = 0; r < rows_; ++r) {
      const double* row = &binv_[static_cast<size_t>(r) * rows_];
      if (var >= cols_) {
        column_[r] = row[var - cols_];
      } else {
        double s = 0.0;
        for (int k = 0; k < rows_; ++k) s += row[k] * lp_.A(k, var);
        column_[r] = s;
      }
    }
  }

  // Minimum ratio; ties go to the basic variable with the lowest index.
  int ChooseLeavingRow() const {
    double min_ratio = -1.0;
    for (int r = 0; r < rows_; ++r) {
      if (column_[r] <= kPivotTolerance) continue;
      const double ratio = std::max(x_basic_[r], 0.0) / column_[r];
      if (min_ratio < 0.0 || ratio < min_ratio) min_ratio = ratio;
    }
    if (min_ratio < 0.0) return -1;
    int best = -1;
    for (int r = 0; r < rows_; ++r) {
      if (column_[r] <= kPivotTolerance) continue;
      const double ratio = std::max(x_basic_[r], 0.0) / column_[r];
      if (ratio > min_ratio + kRatioTieTolerance * (1.0 + min_ratio)) continue;
      if (best < 0 || basis_[r] < basis_[best]) best = r;
    }
    return best;
  }

  void Pivot(int entering, int leaving_row) {
    const double pivot = column_[leaving_row];
    double* prow = &binv_[static_cast<size_t>(leaving_row) * rows_];
    for (int k = 0; k < rows_; ++k) prow[k] /= pivot;
    x_basic_[leaving_row] /= pivot;
    for (int r = 0; r < rows_; ++r) {
      if (r == leaving_row) continue;
      const double f = column_[r];
      if (f == 0.0) continue;
      double* row = &binv_[static_cast<size_t>(r) * rows_];
      for (int k = 0; k < rows_; ++k) row[k] -= f * prow[k];
      x_basic_[r] -= f * x_basic_[leaving_row];
    }
    is_basic_[basis_[leaving_row]] = false;
    basis_[leaving_row] = entering;
    is_basic_[entering] = true;
  }

  DenseLpSolution Extract(int iterations) {
    DenseLpSolution out;
    out.iterations = iterations;
    out.x.assign(cols_, 0.0);
    for (int r = 0; r < rows_; ++r) {
      if (basis_[r] >= cols_) continue;
      // Fresh B^{-1} b instead of the incrementally updated values.
      const double* row = &binv_[static_cast<size_t>(r) * rows_];
      double v = 0.0;
      for (int k = 0; k < rows_; ++k) v += row[k] * lp_.b[k];
      out.x[basis_[r]] = std::max(v, 0.0);
    }
    out.duals = duals_;
    for (int j = 0; j < cols_; ++j) out.objective += lp_.c[j] * out.x[j];
    return out;
  }

  const DenseLp& lp_;
  const int rows_;
  const int cols_;
  std::vector<double> binv_;
  std::vector<int> basis_;
  std::vector<bool> is_basic_;
  std::vector<double> x_basic_;
  std::vector<double> duals_;
  std::vector<double> column_;
  double optimality_tolerance_ = 1e-10;
};

}  // namespace

absl::StatusOr<DenseLpSolution> SolveDenseLp(const DenseLp& lp) {
  if (lp.c.size() != static_cast<size_t>(lp.cols) ||
      lp.b.size() != static_cast<size_t>(lp.rows) ||
      lp.a.size() != static_cast<size_t>(lp.rows) * lp.cols) {
    return absl::InvalidArgumentError("dense LP dimensions do not match");
  }
  for (int r = 0; r < lp.rows; ++r) {
    if (!(lp.b[r] >= 0.0)) {
      return absl::InvalidArgumentError(
          absl::StrCat("dense LP needs b >= 0; b[", r, "] = ", lp.b[r]));
    }
  }
  RevisedSimplex simplex(lp);
  return simplex.Run();
}

}  // namespace orabench::lp
