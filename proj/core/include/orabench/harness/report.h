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

#ifndef ORABENCH_HARNESS_REPORT_H_
#define ORABENCH_HARNESS_REPORT_H_

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "orabench/harness/experiment.h"
#include "orabench/types.h"

namespace orabench::harness {

// Frozen report column order.
const std::vector<std::string>& ReportColumns();

// %.17g; NaN prints as "undefined".
std::string FormatNumber(double x);

void WriteReportCsv(const Report& report, std::ostream& out);
absl::StatusOr<Report> ReadReportCsv(std::istream& in);

struct SummaryRow {
  std::vector<std::string> key;
  std::string benchmark_kind;
  int count = 0;
  int failed = 0;
  // Over rows with a defined ratio. se is NaN below two such rows.
  double mean_ratio = 0.0;
  double se_ratio = 0.0;
  double min_ratio = 0.0;
  double max_ratio = 0.0;
  double mean_value = 0.0;
  double pr_ea = 0.0;
  double pr_be = 0.0;
  double conflict_rate = 0.0;
  // Empirical Pr(EA) exceeds the group's epsilon.
  bool ea_heavy = false;
};

struct Summary {
  std::vector<std::string> keys;
  std::vector<SummaryRow> rows;
};

// Groups rows by the named report columns (first-appearance order). An empty
// grouping yields one global row. A group that mixes benchmark kinds is a
// FailedPrecondition error.
absl::StatusOr<Summary> Summarize(const Report& report,
                                  const std::vector<std::string>& grouping);

void WriteSummaryCsv(const Summary& summary, std::ostream& out);

// One line: stop_time, terminated_early, total_value, base_total_value,
// max_utilization, guard_activations (with a header line).
void WriteTraceSummaryCsv(const Trace& trace, std::span<const double> budgets,
                          std::ostream& out);

}  // namespace orabench::harness

#endif  // ORABENCH_HARNESS_REPORT_H_
