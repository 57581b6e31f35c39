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

#include "orabench/lp/packing_solver.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "absl/strings/str_cat.h"

namespace orabench::lp {
namespace {

// One vertex of the product of cap blocks: per block, the chosen variable or
// -1 for "nothing".
struct Proposal {
  std::vector<int> choice;
  double value = 0.0;
  std::vector<double> use;
  uint64_t hash = 0;
};

uint64_t HashChoice(const std::vector<int>& choice) {
  uint64_t h = 1469598103934665603ULL;
  for (int c : choice) {
    h ^= static_cast<uint64_t>(static_cast<int64_t>(c)) + 0x9E3779B97F4A7C15ULL;
    h *= 1099511628211ULL;
  }
  return h;
}

class ColumnGeneration {
 public:
  explicit ColumnGeneration(const PackingLP& lp)
      : lp_(lp), m_(lp.num_resources), blocks_(lp.num_cap_rows()) {
    for (int v = 0; v < lp.num_variables(); ++v) {
      blocks_[lp.cap_row[v]].push_back(v);
    }
    double scale = 1.0;
    for (double c : lp.objective) scale = std::max(scale, std::abs(c));
    for (double cap : lp.cap_rhs) scale = std::max(scale, cap);
    stop_tolerance_ = 1e-10 * scale;
  }

  absl::StatusOr<FractionalSolution> Run() {
    std::vector<double> prices(m_, 0.0);
    double convexity_dual = 0.0;
    std::vector<double> weights;
    const int cap = 10000 + 10 * lp_.num_cap_rows();
    for (int round = 0;; ++round) {
      if (round > cap) {
        return absl::InternalError(absl::StrCat(
            "numerical-failure: column generation exceeded ", cap, " rounds"));
      }
      Proposal next = Price(prices);
      const double reduced = next.value - Dot(prices, next.use) - convexity_dual;
      if (reduced <= stop_tolerance_ || IsKnown(next)) break;
      Remember(std::move(next));
      absl::StatusOr<DenseLpSolution> master = SolveMaster();
      if (!master.ok()) return master.status();
      prices.assign(master->duals.begin(), master->duals.begin() + m_);
      for (double& p : prices) p = std::max(p, 0.0);
      convexity_dual = std::max(master->duals[m_], 0.0);
      weights = master->x;
    }
    return Assemble(weights, prices);
  }

 private:
  static double Dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (size_t j = 0; j < a.size(); ++j) s += a[j] * b[j];
    return s;
  }

  Proposal Price(const std::vector<double>& prices) const {
    Proposal p;
    p.choice.assign(blocks_.size(), -1);
    p.use.assign(m_, 0.0);
    for (size_t g = 0; g < blocks_.size(); ++g) {
      double best = 0.0;
      int best_var = -1;
      for (int v : blocks_[g]) {
        const auto a = lp_.Consumption(v);
        double u = lp_.objective[v];
        for (int j = 0; j < m_; ++j) u -= prices[j] * a[j];
        if (u > best) {
          best = u;
          best_var = v;
        }
      }
      if (best_var < 0) continue;
      p.choice[g] = best_var;
      const double mass = lp_.cap_rhs[g];
      p.value += mass * lp_.objective[best_var];
      const auto a = lp_.Consumption(best_var);
      for (int j = 0; j < m_; ++j) p.use[j] += mass * a[j];
    }
    p.hash = HashChoice(p.choice);
    return p;
  }

  bool IsKnown(const Proposal& p) const {
    auto [lo, hi] = by_hash_.equal_range(p.hash);
    for (auto it = lo; it != hi; ++it) {
      if (proposals_[it->second].choice == p.choice) return true;
    }
    return false;
  }

  void Remember(Proposal p) {
    by_hash_.emplace(p.hash, proposals_.size());
    proposals_.push_back(std::move(p));
  }

  // max sum_t w_t V_t  s.t.  sum_t w_t C_t <= rhs, sum_t w_t <= 1.
  absl::StatusOr<DenseLpSolution> SolveMaster() const {
    DenseLp master;
    master.rows = m_ + 1;
    master.cols = static_cast<int>(proposals_.size());
    master.c.resize(master.cols);
    master.a.assign(static_cast<size_t>(master.rows) * master.cols, 0.0);
    master.b = lp_.resource_rhs;
    master.b.push_back(1.0);
    for (int t = 0; t < master.cols; ++t) {
      master.c[t] = proposals_[t].value;
      for (int j = 0; j < m_; ++j) master.A(j, t) = proposals_[t].use[j];
      master.A(m_, t) = 1.0;
    }
    return SolveDenseLp(master);
  }

  FractionalSolution Assemble(const std::vector<double>& weights,
                              const std::vector<double>& prices) const {
    FractionalSolution sol;
    sol.mass.assign(lp_.num_variables(), 0.0);
    for (size_t t = 0; t < weights.size(); ++t) {
      const double w = weights[t];
      if (w <= 0.0) continue;
      const Proposal& p = proposals_[t];
      for (size_t g = 0; g < blocks_.size(); ++g) {
        if (p.choice[g] >= 0) sol.mass[p.choice[g]] += w * lp_.cap_rhs[g];
      }
    }
    for (int v = 0; v < lp_.num_variables(); ++v) {
      sol.mass[v] = std::clamp(sol.mass[v], 0.0, 1.0);
      sol.objective += lp_.objective[v] * sol.mass[v];
    }
    sol.resource_duals = prices;
    return sol;
  }

  const PackingLP& lp_;
  const int m_;
  std::vector<std::vector<int>> blocks_;
  std::vector<Proposal> proposals_;
  std::unordered_multimap<uint64_t, size_t> by_hash_;
  double stop_tolerance_ = 1e-10;
};

}  // namespace

absl::StatusOr<FractionalSolution> SolvePackingLp(const PackingLP& lp) {
  if (lp.variables.empty()) return FractionalSolution{{}, 0.0,
      std::vector<double>(lp.num_resources, 0.0)};
  ColumnGeneration cg(lp);
  return cg.Run();
}

DenseLp ToDenseLp(const PackingLP& lp) {
  DenseLp d;
  const int m = lp.num_resources;
  d.rows = m + lp.num_cap_rows();
  d.cols = lp.num_variables();
  d.c = lp.objective;
  d.a.assign(static_cast<size_t>(d.rows) * d.cols, 0.0);
  d.b = lp.resource_rhs;
  d.b.insert(d.b.end(), lp.cap_rhs.begin(), lp.cap_rhs.end());
  for (int v = 0; v < d.cols; ++v) {
    const auto a = lp.Consumption(v);
    for (int j = 0; j < m; ++j) d.A(j, v) = a[j];
    d.A(m + lp.cap_row[v], v) = 1.0;
  }
  return d;
}

absl::StatusOr<FractionalSolution> SolvePackingLpDense(const PackingLP& lp) {
  absl::StatusOr<DenseLpSolution> dense = SolveDenseLp(ToDenseLp(lp));
  if (!dense.ok()) return dense.status();
  FractionalSolution sol;
  sol.mass = std::move(dense->x);
  for (double& x : sol.mass) x = std::clamp(x, 0.0, 1.0);
  for (int v = 0; v < lp.num_variables(); ++v) {
    sol.objective += lp.objective[v] * sol.mass[v];
  }
  sol.resource_duals.assign(dense->duals.begin(),
                            dense->duals.begin() + lp.num_resources);
  return sol;
}

absl::StatusOr<double> LpUpperBound(const Instance& inst) {
  absl::StatusOr<PackingLP> lp = BuildConfigurationLp(inst, 1.0);
  if (!lp.ok()) return lp.status();
  absl::StatusOr<FractionalSolution> sol = SolvePackingLp(*lp);
  if (!sol.ok()) return sol.status();
  return sol->objective;
}

}  // namespace orabench::lp
