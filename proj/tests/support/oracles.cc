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

#include "support/oracles.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

namespace orabench::testing {
namespace {

struct Constraint {
  std::vector<double> coeff;
  double rhs = 0.0;
};

// Solves the square system rows * x = rhs; false when singular.
bool SolveSquare(std::vector<std::vector<double>> a, std::vector<double> b,
                 std::vector<double>& x) {
  const int n = static_cast<int>(b.size());
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    }
    if (std::abs(a[pivot][col]) < 1e-12) return false;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = a[r][col] / a[col][col];
      if (f == 0.0) continue;
      for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  x.resize(n);
  for (int i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return true;
}

}  // namespace

double VertexEnumerationOptimum(const lp::PackingLP& lp) {
  std::vector<int> cols;
  for (int v = 0; v < lp.num_variables(); ++v) {
    if (lp.variables[v].decision != 0) cols.push_back(v);
  }
  const int n = static_cast<int>(cols.size());
  if (n == 0) return 0.0;

  std::vector<Constraint> cons;
  for (int j = 0; j < lp.num_resources; ++j) {
    Constraint c{std::vector<double>(n), lp.resource_rhs[j]};
    for (int k = 0; k < n; ++k) c.coeff[k] = lp.Consumption(cols[k])[j];
    cons.push_back(std::move(c));
  }
  for (int cap = 0; cap < lp.num_cap_rows(); ++cap) {
    Constraint c{std::vector<double>(n), lp.cap_rhs[cap]};
    for (int k = 0; k < n; ++k) c.coeff[k] = lp.cap_row[cols[k]] == cap ? 1.0 : 0.0;
    cons.push_back(std::move(c));
  }
  for (int k = 0; k < n; ++k) {
    Constraint c{std::vector<double>(n, 0.0), 0.0};
    c.coeff[k] = -1.0;
    cons.push_back(std::move(c));
  }
  const int total = static_cast<int>(cons.size());

  double best = 0.0;
  std::vector<int> pick;
  std::vector<double> x;
  std::function<void(int)> choose = [&](int start) {
    if (static_cast<int>(pick.size()) == n) {
      std::vector<std::vector<double>> a;
      std::vector<double> b;
      for (int idx : pick) {
        a.push_back(cons[idx].coeff);
        b.push_back(cons[idx].rhs);
      }
      if (!SolveSquare(a, b, x)) return;
      for (const Constraint& c : cons) {
        double lhs = 0.0;
        for (int k = 0; k < n; ++k) lhs += c.coeff[k] * x[k];
        if (lhs > c.rhs + 1e-9) return;
      }
      double obj = 0.0;
      for (int k = 0; k < n; ++k) obj += lp.objective[cols[k]] * x[k];
      best = std::max(best, obj);
      return;
    }
    for (int i = start; i <= total - (n - static_cast<int>(pick.size())); ++i) {
      pick.push_back(i);
      choose(i + 1);
      pick.pop_back();
    }
  };
  choose(0);
  return best;
}

double ExhaustiveOfflineOpt(std::span<const RealizedRequest> requests,
                            std::span<const double> budgets) {
  const size_t m = budgets.size();
  std::vector<double> used(m, 0.0);
  double best = 0.0;
  std::function<void(size_t, double)> walk = [&](size_t i, double value) {
    if (i == requests.size()) {
      best = std::max(best, value);
      return;
    }
    for (const Decision& d : requests[i].decisions) {
      bool fits = true;
      for (size_t j = 0; j < m; ++j) {
        if (used[j] + d.consumption[j] > budgets[j] + 1e-9) fits = false;
      }
      if (!fits) continue;
      for (size_t j = 0; j < m; ++j) used[j] += d.consumption[j];
      walk(i + 1, value + d.value);
      for (size_t j = 0; j < m; ++j) used[j] -= d.consumption[j];
    }
  };
  walk(0, 0.0);
  return best;
}

ReferenceRun ReferencePricing(std::span<const RealizedRequest> requests,
                              std::span<const double> budgets,
                              const Matrix& a_hat, double lambda_init,
                              std::span<const double> delta, double epsilon) {
  const size_t m = budgets.size();
  ReferenceRun run;
  std::vector<std::vector<double>> taken;
  for (size_t i = 0; i < requests.size(); ++i) {
    std::vector<double> price(m);
    for (size_t j = 0; j < m; ++j) {
      double alg = 0.0;
      double hat = 0.0;
      for (size_t l = 0; l < i; ++l) {
        alg += taken[l][j];
        hat += a_hat(static_cast<int>(l), static_cast<int>(j));
      }
      price[j] = lambda_init * std::exp(delta[j] * (alg - hat));
    }
    const Menu& menu = requests[i].decisions;
    size_t best = 0;
    double best_u = -1e300;
    for (size_t t = 0; t < menu.size(); ++t) {
      double u = menu[t].value;
      for (size_t j = 0; j < m; ++j) u -= price[j] * menu[t].consumption[j];
      if (u > best_u) {
        best_u = u;
        best = t;
      }
    }
    // Hard budget guard: a decision that would overflow some budget becomes
    // the null decision.
    for (size_t j = 0; j < m; ++j) {
      double alg = 0.0;
      for (size_t l = 0; l < i; ++l) alg += taken[l][j];
      if (alg + menu[best].consumption[j] > budgets[j] + 1e-9) best = 0;
    }
    run.chosen.push_back(menu[best].id);
    run.total_value += menu[best].value;
    taken.push_back(menu[best].consumption);
    run.stop_time = static_cast<int>(i) + 1;
    bool stop = false;
    for (size_t j = 0; j < m; ++j) {
      double alg = 0.0;
      double hat = 0.0;
      for (size_t l = 0; l <= i; ++l) {
        alg += taken[l][j];
        hat += a_hat(static_cast<int>(l), static_cast<int>(j));
      }
      if (alg >= hat + epsilon * budgets[j] / 2.0) stop = true;
    }
    if (stop) {
      run.terminated_early = true;
      break;
    }
  }
  return run;
}

std::vector<RealizedRequest> RandomTinyRequests(int n, int menu, int m,
                                                uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<int> value(0, 10);
  std::uniform_int_distribution<int> bit(0, 1);
  std::vector<RealizedRequest> out(n);
  for (int i = 0; i < n; ++i) {
    out[i].step = i;
    Decision null;
    null.consumption.assign(m, 0.0);
    out[i].decisions.push_back(null);
    for (int t = 1; t < menu; ++t) {
      Decision d;
      d.id = t;
      d.value = value(gen);
      for (int j = 0; j < m; ++j) d.consumption.push_back(bit(gen));
      out[i].decisions.push_back(std::move(d));
    }
  }
  return out;
}

}  // namespace orabench::testing
