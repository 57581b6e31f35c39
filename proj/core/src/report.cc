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

#include "orabench/harness/report.h"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <map>
#include <ostream>

#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "orabench/pricing/exponential_pricing.h"

namespace orabench::harness {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string Clean(std::string s) {
  for (char& c : s) {
    if (c == ',' || c == '\n' || c == '\r') c = ';';
  }
  return s;
}

std::vector<std::string> Cells(const TrialRow& r) {
  return {absl::StrCat(r.trial),
          absl::StrCat(r.seed),
          Clean(r.algorithm),
          Clean(r.family),
          FormatNumber(r.budget),
          FormatNumber(r.epsilon),
          Clean(r.benchmark_kind),
          FormatNumber(r.benchmark),
          FormatNumber(r.total_value),
          FormatNumber(r.base_value),
          FormatNumber(r.ratio),
          absl::StrCat(r.stop_time),
          r.terminated_early ? "1" : "0",
          r.be_event ? "1" : "0",
          r.conflict ? "1" : "0",
          FormatNumber(r.max_utilization),
          absl::StrCat(r.guard_activations),
          absl::StrCat(r.red_allocations),
          Clean(r.status)};
}

bool ParseNumber(const std::string& s, double& out) {
  if (s == "undefined") {
    out = kNaN;
    return true;
  }
  return absl::SimpleAtod(s, &out);
}

bool ParseFlag(const std::string& s, bool& out) {
  if (s != "0" && s != "1") return false;
  out = s == "1";
  return true;
}

absl::StatusOr<TrialRow> ParseRow(const std::vector<std::string>& c) {
  TrialRow r;
  bool ok = absl::SimpleAtoi(c[0], &r.trial) && absl::SimpleAtoi(c[1], &r.seed);
  r.algorithm = c[2];
  r.family = c[3];
  ok = ok && ParseNumber(c[4], r.budget) && ParseNumber(c[5], r.epsilon);
  r.benchmark_kind = c[6];
  ok = ok && ParseNumber(c[7], r.benchmark) &&
       ParseNumber(c[8], r.total_value) && ParseNumber(c[9], r.base_value) &&
       ParseNumber(c[10], r.ratio) && absl::SimpleAtoi(c[11], &r.stop_time) &&
       ParseFlag(c[12], r.terminated_early) && ParseFlag(c[13], r.be_event) &&
       ParseFlag(c[14], r.conflict) && ParseNumber(c[15], r.max_utilization) &&
       absl::SimpleAtoi(c[16], &r.guard_activations) &&
       absl::SimpleAtoi(c[17], &r.red_allocations);
  r.status = c[18];
  if (!ok) return absl::InvalidArgumentError("malformed report row");
  return r;
}

// Value of a grouping column for one row.
absl::StatusOr<std::string> KeyCell(const TrialRow& row,
                                    const std::string& column) {
  const std::vector<std::string>& cols = ReportColumns();
  auto it = std::find(cols.begin(), cols.end(), column);
  if (it == cols.end()) {
    return absl::InvalidArgumentError(
        absl::StrCat("unknown grouping column '", column, "'"));
  }
  return Cells(row)[it - cols.begin()];
}

}  // namespace

const std::vector<std::string>& ReportColumns() {
  static const auto* kColumns = new std::vector<std::string>{
      "trial",          "seed",          "algorithm",
      "family",         "budget",        "epsilon",
      "benchmark_kind", "benchmark",     "total_value",
      "base_value",     "ratio",         "stop_time",
      "terminated_early", "be_event",    "conflict",
      "max_utilization", "guard_activations", "red_allocations",
      "status"};
  return *kColumns;
}

std::string FormatNumber(double x) {
  if (std::isnan(x)) return "undefined";
  return absl::StrFormat("%.17g", x);
}

void WriteReportCsv(const Report& report, std::ostream& out) {
  out << absl::StrJoin(ReportColumns(), ",") << "\n";
  for (const TrialRow& row : report.rows) {
    out << absl::StrJoin(Cells(row), ",") << "\n";
  }
}

absl::StatusOr<Report> ReadReportCsv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) ||
      line != absl::StrJoin(ReportColumns(), ",")) {
    return absl::InvalidArgumentError("report header does not match");
  }
  Report report;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> cells = absl::StrSplit(line, ',');
    if (cells.size() != ReportColumns().size()) {
      return absl::InvalidArgumentError(
          absl::StrCat("line ", line_no, ": expected ", ReportColumns().size(),
                       " cells, got ", cells.size()));
    }
    absl::StatusOr<TrialRow> row = ParseRow(cells);
    if (!row.ok()) {
      return absl::InvalidArgumentError(
          absl::StrCat("line ", line_no, ": ", row.status().message()));
    }
    report.rows.push_back(*std::move(row));
  }
  return report;
}

absl::StatusOr<Summary> Summarize(const Report& report,
                                  const std::vector<std::string>& grouping) {
  if (report.rows.empty()) {
    return absl::InvalidArgumentError("cannot summarize an empty report");
  }
  Summary summary;
  summary.keys = grouping;
  std::map<std::vector<std::string>, int> index;
  std::vector<std::vector<const TrialRow*>> members;
  for (const TrialRow& row : report.rows) {
    std::vector<std::string> key;
    for (const std::string& col : grouping) {
      absl::StatusOr<std::string> cell = KeyCell(row, col);
      if (!cell.ok()) return cell.status();
      key.push_back(*std::move(cell));
    }
    auto [it, inserted] = index.emplace(key, static_cast<int>(members.size()));
    if (inserted) {
      members.emplace_back();
      summary.rows.push_back({});
      summary.rows.back().key = key;
    }
    members[it->second].push_back(&row);
  }
  for (size_t g = 0; g < members.size(); ++g) {
    SummaryRow& out = summary.rows[g];
    out.benchmark_kind = members[g].front()->benchmark_kind;
    std::vector<double> ratios;
    double value = 0.0;
    double ea = 0.0;
    double be = 0.0;
    double conflict = 0.0;
    double eps = 0.0;
    for (const TrialRow* row : members[g]) {
      if (row->benchmark_kind != out.benchmark_kind) {
        return absl::FailedPreconditionError(absl::StrCat(
            "group mixes benchmark kinds '", out.benchmark_kind, "' and '",
            row->benchmark_kind, "'"));
      }
      ++out.count;
      if (row->status != "ok") {
        ++out.failed;
        continue;
      }
      if (!std::isnan(row->ratio)) ratios.push_back(row->ratio);
      value += row->total_value;
      ea += row->terminated_early;
      be += row->be_event;
      conflict += row->conflict;
      eps += row->epsilon;
    }
    const int ok = out.count - out.failed;
    if (ok > 0) {
      out.mean_value = value / ok;
      out.pr_ea = ea / ok;
      out.pr_be = be / ok;
      out.conflict_rate = conflict / ok;
      out.ea_heavy = out.pr_ea > eps / ok;
    }
    out.se_ratio = kNaN;
    if (ratios.empty()) {
      out.mean_ratio = out.min_ratio = out.max_ratio = kNaN;
      continue;
    }
    double sum = 0.0;
    for (double r : ratios) sum += r;
    out.mean_ratio = sum / ratios.size();
    out.min_ratio = *std::min_element(ratios.begin(), ratios.end());
    out.max_ratio = *std::max_element(ratios.begin(), ratios.end());
    if (ratios.size() >= 2) {
      double ss = 0.0;
      for (double r : ratios) ss += (r - out.mean_ratio) * (r - out.mean_ratio);
      const double var = ss / (ratios.size() - 1);
      out.se_ratio = std::sqrt(var / ratios.size());
    }
  }
  return summary;
}

void WriteSummaryCsv(const Summary& summary, std::ostream& out) {
  std::vector<std::string> header = summary.keys;
  for (const char* col :
       {"benchmark_kind", "count", "failed", "mean_ratio", "se_ratio",
        "min_ratio", "max_ratio", "mean_value", "pr_ea", "pr_be",
        "conflict_rate", "ea_heavy"}) {
    header.push_back(col);
  }
  out << absl::StrJoin(header, ",") << "\n";
  for (const SummaryRow& row : summary.rows) {
    std::vector<std::string> cells = row.key;
    cells.push_back(row.benchmark_kind);
    cells.push_back(absl::StrCat(row.count));
    cells.push_back(absl::StrCat(row.failed));
    for (double x : {row.mean_ratio, row.se_ratio, row.min_ratio, row.max_ratio,
                     row.mean_value, row.pr_ea, row.pr_be, row.conflict_rate}) {
      cells.push_back(FormatNumber(x));
    }
    cells.push_back(row.ea_heavy ? "1" : "0");
    out << absl::StrJoin(cells, ",") << "\n";
  }
}

void WriteTraceSummaryCsv(const Trace& trace, std::span<const double> budgets,
                          std::ostream& out) {
  out << "stop_time,terminated_early,total_value,base_total_value,"
         "max_utilization,guard_activations\n";
  out << trace.stop_time << "," << (trace.terminated_early ? 1 : 0) << ","
      << FormatNumber(trace.total_value) << ","
      << FormatNumber(trace.base_total_value) << ","
      << FormatNumber(pricing::MaxUtilization(trace, budgets)) << ","
      << trace.guard_activations << "\n";
}

}  // namespace orabench::harness
