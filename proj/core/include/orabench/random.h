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

#ifndef ORABENCH_RANDOM_H_
#define ORABENCH_RANDOM_H_

#include <cstdint>
#include <random>
#include <vector>

#include "orabench/types.h"

namespace orabench {

// Seeded pseudo-random stream. Wraps mt19937_64 with distribution code that
// does not depend on the standard library implementation, so draws are
// reproducible across toolchains.
class RandomStream {
 public:
  explicit RandomStream(uint64_t seed) : engine_(seed), seed_(seed) {}

  uint64_t seed() const { return seed_; }

  uint64_t NextU64() { return engine_(); }
  // Uniform in [0, 1) with 53 bits of resolution.
  double NextUniform();
  // Uniform in [lo, hi).
  double NextUniform(double lo, double hi);
  // Uniform integer in [0, bound). `bound` must be positive.
  uint64_t NextBelow(uint64_t bound);
  bool NextBernoulli(double p) { return NextUniform() < p; }

  // In-place Fisher-Yates shuffle.
  template <typename T>
  void Shuffle(std::vector<T>& items) {
    for (size_t i = items.size(); i > 1; --i) {
      const size_t j = NextBelow(i);
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
  uint64_t seed_;
};

// Seed of the `index`-th independent sub-stream of `master` (splitmix64).
uint64_t DeriveSeed(uint64_t master, uint64_t index);

// Inverse-CDF type selection: the first type whose cumulative probability
// exceeds `u`.
int SelectType(const RequestDistribution& dist, double u);

// Draws gamma_i ~ D_i using one uniform from `rng`.
RealizedRequest SampleRequest(const RequestDistribution& dist, int step,
                              RandomStream& rng);

// Draws a full realization gamma_1..gamma_n of `inst`.
std::vector<RealizedRequest> SampleRealization(const Instance& inst,
                                               RandomStream& rng);

}  // namespace orabench

#endif  // ORABENCH_RANDOM_H_
