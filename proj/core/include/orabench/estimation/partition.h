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

#ifndef ORABENCH_ESTIMATION_PARTITION_H_
#define ORABENCH_ESTIMATION_PARTITION_H_

#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "orabench/random.h"

namespace orabench::estimation {

// D disjoint equal-sized parts covering [0, n + pad_count). Indices >= n are
// null-only padding requests.
struct Partition {
  int n = 0;
  int pad_count = 0;
  std::vector<std::vector<int>> parts;

  int n_padded() const { return n + pad_count; }
};

// Pads n up to a multiple of D, shuffles the indices uniformly and slices
// them into D parts in shuffled order.
absl::StatusOr<Partition> RandomPartition(int n, int D, RandomStream& rng);

// Checks disjointness, equal sizes and exact coverage.
absl::Status ValidatePartition(const Partition& partition);

}  // namespace orabench::estimation

#endif  // ORABENCH_ESTIMATION_PARTITION_H_
