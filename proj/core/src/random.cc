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

#include "orabench/random.h"

namespace orabench {

double RandomStream::NextUniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RandomStream::NextUniform(double lo, double hi) {
  return lo + (hi - lo) * NextUniform();
}

uint64_t RandomStream::NextBelow(uint64_t bound) {
  // Rejection sampling removes modulo bias.
  const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return x % bound;
}

uint64_t DeriveSeed(uint64_t master, uint64_t index) {
  uint64_t z = master + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

int SelectType(const RequestDistribution& dist, double u) {
  double cumulative = 0.0;
  const int k = static_cast<int>(dist.types.size());
  for (int t = 0; t < k; ++t) {
    cumulative += dist.types[t].probability;
    if (u < cumulative) return t;
  }
  return k - 1;
}

RealizedRequest SampleRequest(const RequestDistribution& dist, int step,
                              RandomStream& rng) {
  const int k = SelectType(dist, rng.NextUniform());
  return RealizedRequest{step, k, dist.types[k].decisions};
}

std::vector<RealizedRequest> SampleRealization(const Instance& inst,
                                               RandomStream& rng) {
  std::vector<RealizedRequest> out;
  out.reserve(inst.distributions.size());
  for (int i = 0; i < inst.n(); ++i) {
    out.push_back(SampleRequest(inst.distributions[i], i, rng));
  }
  return out;
}

}  // namespace orabench
