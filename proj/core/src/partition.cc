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

#include "orabench/estimation/partition.h"

#include <numeric>

#include "absl/strings/str_cat.h"

namespace orabench::estimation {

absl::StatusOr<Partition> RandomPartition(int n, int D, RandomStream& rng) {
  if (n < 1 || D < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("partition needs n >= 1 and D >= 1, got n = ", n,
                     ", D = ", D));
  }
  Partition out;
  out.n = n;
  out.pad_count = (D - n % D) % D;
  const int total = out.n_padded();
  if (D > total) {
    return absl::InvalidArgumentError(
        absl::StrCat("D = ", D, " exceeds the padded size ", total));
  }
  std::vector<int> order(total);
  std::iota(order.begin(), order.end(), 0);
  rng.Shuffle(order);
  const int size = total / D;
  out.parts.resize(D);
  for (int d = 0; d < D; ++d) {
    out.parts[d].assign(order.begin() + d * size,
                        order.begin() + (d + 1) * size);
  }
  return out;
}

absl::Status ValidatePartition(const Partition& partition) {
  const int total = partition.n_padded();
  if (partition.parts.empty()) {
    return absl::InvalidArgumentError("partition has no parts");
  }
  const size_t size = partition.parts.front().size();
  std::vector<char> seen(total, 0);
  for (const auto& part : partition.parts) {
    if (part.size() != size) {
      return absl::InvalidArgumentError("partition parts differ in size");
    }
    for (int idx : part) {
      if (idx < 0 || idx >= total || seen[idx]) {
        return absl::InvalidArgumentError(
            absl::StrCat("index ", idx, " is out of range or repeated"));
      }
      seen[idx] = 1;
    }
  }
  if (size * partition.parts.size() != static_cast<size_t>(total)) {
    return absl::InvalidArgumentError("partition does not cover all indices");
  }
  return absl::OkStatus();
}

}  // namespace orabench::estimation
