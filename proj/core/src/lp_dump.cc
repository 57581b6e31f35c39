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

#include "orabench/lp/lp_dump.h"

#include <string>
#include <vector>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"

namespace orabench::lp {
namespace {

std::string Name(const VariableKey& k) {
  return absl::StrCat("x_", k.request, "_", k.type, "_", k.decision);
}

std::string Num(double x) { return absl::StrFormat("%.17g", x); }

void AppendTerm(std::string& line, double coef, const std::string& name,
                bool& first) {
  absl::StrAppend(&line, first ? " " : " + ", Num(coef), " ", name);
  first = false;
}

}  // namespace

std::string DumpLp(const PackingLP& lp) {
  std::string out = "\\ packing LP\nMaximize\n obj:";
  bool first = true;
  for (int v = 0; v < lp.num_variables(); ++v) {
    if (lp.objective[v] == 0.0) continue;
    AppendTerm(out, lp.objective[v], Name(lp.variables[v]), first);
  }
  if (first) absl::StrAppend(&out, " 0 ", Name(lp.variables.front()));
  absl::StrAppend(&out, "\nSubject To\n");
  for (int j = 0; j < lp.num_resources; ++j) {
    std::string line = absl::StrCat(" resource_", j, ":");
    first = true;
    for (int v = 0; v < lp.num_variables(); ++v) {
      const double a = lp.Consumption(v)[j];
      if (a != 0.0) AppendTerm(line, a, Name(lp.variables[v]), first);
    }
    if (first) continue;  // empty row
    absl::StrAppend(&out, line, " <= ", Num(lp.resource_rhs[j]), "\n");
  }
  std::vector<std::string> caps(lp.num_cap_rows());
  std::vector<bool> cap_first(lp.num_cap_rows(), true);
  for (int v = 0; v < lp.num_variables(); ++v) {
    const int c = lp.cap_row[v];
    absl::StrAppend(&caps[c], cap_first[c] ? " " : " + ", Name(lp.variables[v]));
    cap_first[c] = false;
  }
  for (int c = 0; c < lp.num_cap_rows(); ++c) {
    absl::StrAppend(&out, " cap_", c, ":", caps[c], " <= ", Num(lp.cap_rhs[c]),
                    "\n");
  }
  absl::StrAppend(&out, "Bounds\n");
  for (const VariableKey& k : lp.variables) {
    absl::StrAppend(&out, " 0 <= ", Name(k), " <= 1\n");
  }
  absl::StrAppend(&out, "End\n");
  return out;
}

}  // namespace orabench::lp
