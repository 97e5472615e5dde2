/*
 * Copyright 2026 The hecache Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "hecache/bench/report.hpp"

#include <cstdio>
#include <sstream>

#include "hecache/errors.hpp"

namespace hecache::bench {
namespace {

std::string Fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

std::string Sci(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3e", v);
  return buf;
}

std::string StatusText(const BenchRow& row) {
  switch (row.status) {
    case RowStatus::kOk:
      return "ok";
    case RowStatus::kDecryptError:
      return "decrypt-error";
    case RowStatus::kFailed:
      return "failed";
  }
  return "?";
}

std::string CsvQuote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  return out + "\"";
}

std::string NPivotText(const BenchRow& row) {
  return row.n_pivot == 0 ? "-" : std::to_string(row.n_pivot);
}

struct Cells {
  std::string total, per_message, ratio;
};

Cells TimingCells(const BenchRow& row, const EmitOptions& options) {
  if (!options.include_timing || row.status == RowStatus::kFailed) return {};
  return {Fixed(row.total_ms, 3), Fixed(row.per_message_ms, 4),
          row.ratio_over_ckks > 0.0 ? Fixed(row.ratio_over_ckks, 2) : ""};
}

std::string EmitCsv(const BenchReport& report, const EmitOptions& options) {
  std::ostringstream out;
  out << "scheme,npivot,messages,total_ms,per_message_ms,ring_ops,max_abs_error,error_bound,"
         "ratio_over_ckks,status,detail\n";
  for (const BenchRow& row : report.rows) {
    const Cells t = TimingCells(row, options);
    const bool failed = row.status == RowStatus::kFailed;
    out << SchemeName(row.scheme) << ',' << row.n_pivot << ',' << row.messages << ',' << t.total
        << ',' << t.per_message << ',' << (failed ? "" : std::to_string(row.ring_ops)) << ','
        << (failed ? "" : Sci(row.max_abs_error)) << ',' << (failed ? "" : Sci(row.error_bound))
        << ',' << t.ratio << ',' << StatusText(row) << ',' << CsvQuote(row.detail) << '\n';
  }
  return out.str();
}

std::string EmitMarkdown(const BenchReport& report, const EmitOptions& options) {
  const ring::Params& p = report.params;
  std::ostringstream out;
  out << "# Encryption benchmark\n\n";
  out << "- N: " << p.n << "\n";
  out << "- q: " << ToString(p.q) << "\n";
  out << "- delta: " << ToString(p.delta) << "\n";
  out << "- sigma: " << p.sigma << "\n";
  out << "- radix: " << p.radix << "\n";
  out << "- seed: " << report.seed << "\n";
  out << "- repeat: " << report.repeat << "\n";
  out << "- workload: " << report.workload << "\n\n";

  out << "| Scheme | nPivot | Messages | Overall Time (ms) | Time / Message (ms) | Ring ops | "
         "Max error | Error bound | Ratio over CkksEnc | Status |\n";
  out << "|---|---|---|---|---|---|---|---|---|---|\n";
  for (const BenchRow& row : report.rows) {
    const Cells t = TimingCells(row, options);
    const bool failed = row.status == RowStatus::kFailed;
    out << "| " << SchemeName(row.scheme) << " | " << NPivotText(row) << " | " << row.messages
        << " | " << t.total << " | " << t.per_message << " | "
        << (failed ? "" : std::to_string(row.ring_ops)) << " | "
        << (failed ? "" : Sci(row.max_abs_error)) << " | "
        << (failed ? "" : Sci(row.error_bound)) << " | " << t.ratio << " | " << StatusText(row);
    if (!row.detail.empty()) out << ": " << row.detail;
    out << " |\n";
  }

  bool any_rache = false;
  for (const BenchRow& row : report.rows) any_rache |= row.scheme == Scheme::kRache;
  if (any_rache) {
    out << "\n## RacheEnc scaling\n\n";
    out << "| nPivot | Messages | RacheEnc (ms) | Ratio over CkksEnc |\n";
    out << "|---|---|---|---|\n";
    for (const BenchRow& row : report.rows) {
      if (row.scheme != Scheme::kRache) continue;
      const Cells t = TimingCells(row, options);
      out << "| " << row.n_pivot << " | " << row.messages << " | "
          << (row.status == RowStatus::kFailed ? "failed" : t.total) << " | " << t.ratio
          << " |\n";
    }
  }
  return out.str();
}

}  // namespace

ReportFormat ParseReportFormat(std::string_view name) {
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "markdown" || name == "md") return ReportFormat::kMarkdown;
  throw ParameterError("unknown report format '" + std::string(name) + "'");
}

std::string EmitReport(const BenchReport& report, ReportFormat format, EmitOptions options) {
  return format == ReportFormat::kCsv ? EmitCsv(report, options) : EmitMarkdown(report, options);
}

}  // namespace hecache::bench
