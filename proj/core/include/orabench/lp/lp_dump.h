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

#ifndef ORABENCH_LP_LP_DUMP_H_
#define ORABENCH_LP_LP_DUMP_H_

#include <string>

#include "orabench/lp/packing_lp.h"

namespace orabench::lp {

// Writes `lp` in CPLEX LP text format (objective line, one line per
// constraint, bounds section) so it can be cross-checked by external solvers.
// Variables are named x_<request>_<type>_<decision>.
std::string DumpLp(const PackingLP& lp);

}  // namespace orabench::lp

#endif  // ORABENCH_LP_LP_DUMP_H_
