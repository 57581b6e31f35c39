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

#include "orabench/lp/brute_force.h"

#include <algorithm>
#include <cmath>

#include "absl/strings/str_cat.h"

namespace orabench::lp {
namespace {

struct MenuClass {
  const Menu* menu = nullptr;
  std::vector<int> members;
  double best_value = 0.0;
};

std::vector<MenuClass> GroupIdenticalMenus(
    std::span<const RealizedRequest> requests) {
  std::vector<MenuClass> classes;
  for (int i = 0; i < static_cast<int>(requests.size()); ++i) {
    const Menu& menu = requests[i].decisions;
    auto it = std::find_if(classes.begin(), classes.end(),
                           [&](const MenuClass& c) { return *c.menu == menu; });
    if (it == classes.end()) {
      MenuClass c;
      c.menu = &menu;
      for (const Decision& d : menu) c.best_value = std::max(c.best_value, d.value);
      classes.push_back(std::move(c));
      it = classes.end() - 1;
    }
    it->members.push_back(i);
  }
  return classes;
}

double Multisets(int items, int kinds) {
  // C(items + kinds - 1, kinds - 1) in floating point.
  double r = 1.0;
  for (int t = 1; t < kinds; ++t) r = r * (items + t) / t;
  return r;
}

class Search {
 public:
  Search(std::vector<MenuClass> classes, std::span<const double> budgets)
      : classes_(std::move(classes)),
        budgets_(budgets.begin(), budgets.end()),
        use_(budgets.size(), 0.0),
        counts_(classes_.size()),
        best_counts_(classes_.size()),
        tail_bound_(classes_.size() + 1, 0.0) {
    for (size_t c = 0; c < classes_.size(); ++c) {
      counts_[c].assign(classes_[c].menu->size(), 0);
    }
    for (size_t c = classes_.size(); c-- > 0;) {
      tail_bound_[c] = tail_bound_[c + 1] +
                       classes_[c].best_value * classes_[c].members.size();
    }
  }

  void Run() { Visit(0, 1, 0, 0.0); }

  double best_value() const { return best_value_; }

  std::vector<int> Assignment(size_t n) const {
    std::vector<int> out(n, 0);
    for (size_t c = 0; c < classes_.size(); ++c) {
      const auto& members = classes_[c].members;
      const auto& counts = best_counts_[c];
      int nonnull = 0;
      for (size_t t = 1; t < counts.size(); ++t) nonnull += counts[t];
      // Ascending id order: null decisions first, then 1, 2, ...
      size_t pos = members.size() - nonnull;
      for (size_t t = 1; t < counts.size(); ++t) {
        for (int r = 0; r < counts[t]; ++r) out[members[pos++]] = static_cast<int>(t);
      }
    }
    return out;
  }

 private:
  // Distributes the still-unassigned members of class `c` over decisions
  // t, t+1, ... of its menu.
  void Visit(size_t c, size_t t, int assigned, double value) {
    if (c == classes_.size()) {
      if (value > best_value_) {
        best_value_ = value;
        best_counts_ = counts_;
      }
      return;
    }
    const MenuClass& cls = classes_[c];
    const int remaining = static_cast<int>(cls.members.size()) - assigned;
    if (t >= cls.menu->size() || remaining == 0) {
      Visit(c + 1, 1, 0, value);
      return;
    }
    if (value + remaining * cls.best_value + tail_bound_[c + 1] <= best_value_) {
      return;
    }
    const Decision& d = (*cls.menu)[t];
    int max_count = remaining;
    for (size_t j = 0; j < budgets_.size(); ++j) {
      if (d.consumption[j] <= 0.0) continue;
      const double room = budgets_[j] - use_[j] + kFeasibilityTolerance;
      max_count = std::min(
          max_count, static_cast<int>(std::floor(room / d.consumption[j])));
    }
    for (int k = std::max(max_count, 0); k >= 0; --k) {
      for (size_t j = 0; j < budgets_.size(); ++j) use_[j] += k * d.consumption[j];
      counts_[c][t] = k;
      Visit(c, t + 1, assigned + k, value + k * d.value);
      for (size_t j = 0; j < budgets_.size(); ++j) use_[j] -= k * d.consumption[j];
    }
    counts_[c][t] = 0;
  }

  std::vector<MenuClass> classes_;
  std::vector<double> budgets_;
  std::vector<double> use_;
  std::vector<std::vector<int>> counts_;
  std::vector<std::vector<int>> best_counts_;
  std::vector<double> tail_bound_;
  double best_value_ = -1.0;
};

}  // namespace

double BruteForceSearchSpace(std::span<const RealizedRequest> requests) {
  double space = 1.0;
  for (const MenuClass& c : GroupIdenticalMenus(requests)) {
    space *= Multisets(static_cast<int>(c.members.size()),
                       static_cast<int>(c.menu->size()));
  }
  return space;
}

absl::StatusOr<OfflineOptimum> BruteForceOfflineOpt(
    std::span<const RealizedRequest> requests, std::span<const double> budgets,
    double limit) {
  std::vector<MenuClass> classes = GroupIdenticalMenus(requests);
  double space = 1.0;
  for (const MenuClass& c : classes) {
    space *= Multisets(static_cast<int>(c.members.size()),
                       static_cast<int>(c.menu->size()));
  }
  if (space > limit) {
    return absl::ResourceExhaustedError(absl::StrCat(
        "too-large: brute force search space ", space, " exceeds ", limit));
  }
  Search search(std::move(classes), budgets);
  search.Run();
  OfflineOptimum out;
  out.value = std::max(search.best_value(), 0.0);
  out.assignment = search.Assignment(requests.size());
  out.search_space = space;
  return out;
}

}  // namespace orabench::lp
