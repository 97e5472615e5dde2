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

#ifndef HECACHE_BENCH_REPORT_HPP_
#define HECACHE_BENCH_REPORT_HPP_

#include <string>
#include <string_view>

#include "hecache/bench/runner.hpp"

namespace hecache::bench {

enum class ReportFormat { kCsv, kMarkdown };

// Throws ParameterError for anything but "csv" or "markdown".
ReportFormat ParseReportFormat(std::string_view name);

struct EmitOptions {
  // When false the timing columns are blanked, leaving text that depends only
  // on the seed and configuration.
  bool include_timing = true;
};

// CSV: header plus one line per row. Markdown: a metadata block, the full
// table and, when Rache rows exist, a per-nPivot scaling table.
std::string EmitReport(const BenchReport& report, ReportFormat format, EmitOptions options = {});

}  // namespace hecache::bench

#endif  // HECACHE_BENCH_REPORT_HPP_
