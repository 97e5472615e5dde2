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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hecache/bench/report.hpp"
#include "hecache/bench/runner.hpp"
#include "hecache/bench/workload.hpp"
#include "hecache/errors.hpp"

namespace hecache::bench {
namespace {

namespace fs = std::filesystem;

class TempCsv {
 public:
  explicit TempCsv(const std::string& body) {
    path_ = fs::temp_directory_path() /
            ("hecache_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)) + ".csv");
    std::ofstream(path_) << body;
  }
  ~TempCsv() { fs::remove(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

std::size_t CountLines(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

TEST(LoadDataset, BinaryPrecisionFromFractionalDigits) {
  TempCsv csv("date,volume\n2021-01-01,1.5\n2021-01-02,2.25\n2021-01-03,3.0\n");
  const Workload w = LoadDataset(csv.path(), "volume");
  EXPECT_EQ(w.values, (std::vector<double>{1.5, 2.25, 3.0}));
  EXPECT_EQ(w.precision_inv, 0.25);
  EXPECT_EQ(w.skipped_rows, 0u);
  EXPECT_EQ(w.source, WorkloadSource::kCsv);
  EXPECT_EQ(LoadDataset(csv.path(), "1").values.size(), 3u);
}

TEST(LoadDataset, DecimalTenthsMapToSixteenths) {
  TempCsv csv("x\n0.1\n2\n");
  EXPECT_EQ(LoadDataset(csv.path(), "x").precision_inv, 1.0 / 16);
  TempCsv ints("x\n10\n-4\n7\n");
  EXPECT_EQ(LoadDataset(ints.path(), "x").precision_inv, 1.0);
}

TEST(LoadDataset, SkipsUnparseableRows) {
  TempCsv csv("name,value\na,1\nb,n/a\nc,3\n\"d, quoted\",4.5\n");
  const Workload w = LoadDataset(csv.path(), "value");
  EXPECT_EQ(w.values, (std::vector<double>{1, 3, 4.5}));
  EXPECT_EQ(w.skipped_rows, 1u);
  EXPECT_EQ(w.precision_inv, 0.5);
}

TEST(LoadDataset, Errors) {
  TempCsv empty("");
  EXPECT_THROW(LoadDataset(empty.path(), "x"), FormatError);
  TempCsv header_only("x\n");
  EXPECT_THROW(LoadDataset(header_only.path(), "x"), FormatError);
  TempCsv text("x\nfoo\nbar\n");
  EXPECT_THROW(LoadDataset(text.path(), "x"), FormatError);
  EXPECT_THROW(LoadDataset(text.path(), "y"), FormatError);
  EXPECT_THROW(LoadDataset(text.path(), "5"), FormatError);
  EXPECT_THROW(LoadDataset("/nonexistent/data.csv", "x"), IoError);
}

TEST(Synthetic, UniformIsDeterministicAndInRange) {
  const SyntheticSpec spec = SyntheticSpec::Parse("uniform(0,1)");
  const Workload a = GenSynthetic(spec, 40, 7);
  const Workload b = GenSynthetic(spec, 40, 7);
  EXPECT_EQ(a.values, b.values);
  EXPECT_EQ(a.values.size(), 40u);
  for (double v : a.values) {
    EXPECT_GE(v, 0.0);
    EXPECT_LT(v, 1.0);
    EXPECT_EQ(v * 64, std::floor(v * 64));
  }
  EXPECT_EQ(a.precision_inv, 1.0 / 64);
  EXPECT_NE(GenSynthetic(spec, 40, 8).values, a.values);
}

TEST(Synthetic, TrillionScaleIntegers) {
  const SyntheticSpec spec = SyntheticSpec::Parse("integers(0, 10^12)");
  EXPECT_EQ(spec.hi, 1e12);
  const Workload w = GenSynthetic(spec, 1086, 1);
  EXPECT_EQ(w.values.size(), 1086u);
  EXPECT_EQ(w.precision_inv, 1.0);
  const double top = *std::max_element(w.values.begin(), w.values.end());
  EXPECT_GT(top, 1e11);
  EXPECT_LT(top, 1e12);
  for (double v : w.values) EXPECT_EQ(v, std::floor(v));
  EXPECT_EQ(SyntheticSpec::Parse("integers(0,1e12)").hi, 1e12);
}

TEST(Synthetic, SpecErrors) {
  EXPECT_THROW(GenSynthetic(SyntheticSpec::Parse("uniform(0,1)"), 0, 1), ParameterError);
  for (const char* bad : {"", "normal(0,1)", "uniform(1,0)", "uniform(0)", "uniform(0,1",
                          "integers(0.5,3)", "uniform(a,b)", "integers(0,1,2)"}) {
    EXPECT_THROW(SyntheticSpec::Parse(bad), ParameterError) << bad;
  }
  EXPECT_EQ(SyntheticSpec::Parse("uniform(0,1,3)").fractional_digits, 3);
  EXPECT_EQ(SyntheticSpec::Parse("pivotspace").kind, SyntheticSpec::Kind::kPivotSpace);
  EXPECT_THROW(GenSynthetic(SyntheticSpec::Parse("pivotspace"), 5, 1), ParameterError);
}

TEST(Synthetic, PivotSpaceStaysBelowTopPivot) {
  for (std::size_t np : {2u, 4u, 16u, 64u}) {
    const Workload w = GenPivotSpace(np, 200, 3);
    const double bound = std::ldexp(1.0, static_cast<int>(np) - 1);
    for (double v : w.values) {
      EXPECT_LT(v, bound);
      EXPECT_GE(v, 0.0);
    }
  }
}

TEST(Precision, BinaryPrecisionOf) {
  EXPECT_EQ(BinaryPrecisionOf(3.0, 2, 10), 1.0);
  EXPECT_EQ(BinaryPrecisionOf(0.375, 2, 10), 0.125);
  EXPECT_EQ(BinaryPrecisionOf(0.1, 2, 4), 1.0 / 16);
  EXPECT_EQ(BinaryPrecisionOf(0.75, 4, 5), 0.25);
  // 2/3 has no finite base-3 expansion as a double.
  EXPECT_EQ(BinaryPrecisionOf(2.0 / 3, 3, 5), 1.0 / 243);
}

BenchReport SampleReport() {
  BenchReport r;
  r.params = ring::Params::Default(3);
  r.seed = 3;
  r.repeat = 5;
  r.workload = "unit";
  BenchRow row;
  row.scheme = Scheme::kSmuche;
  row.messages = 40;
  row.total_ms = 12.5;
  row.per_message_ms = 12.5 / 40;
  row.ring_ops = 240;
  row.max_abs_error = 1e-12;
  row.error_bound = 1e-8;
  row.ratio_over_ckks = 0.4;
  r.rows.push_back(row);
  return r;
}

TEST(Report, CsvHeaderPlusOneLine) {
  const std::string csv = EmitReport(SampleReport(), ReportFormat::kCsv);
  EXPECT_EQ(CountLines(csv), 2u);
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "scheme,npivot,messages,total_ms,per_message_ms,ring_ops,max_abs_error,error_bound,"
            "ratio_over_ckks,status,detail");
  EXPECT_NE(csv.find("smuche,0,40,12.500,0.3125,240,1.000e-12,1.000e-08,0.40,ok,"),
            std::string::npos);
}

TEST(Report, MarkdownRacheScalingTable) {
  BenchReport r = SampleReport();
  for (std::size_t np : {4u, 8u}) {
    BenchRow row;
    row.scheme = Scheme::kRache;
    row.n_pivot = np;
    row.messages = 40;
    row.total_ms = static_cast<double>(np);
    row.ratio_over_ckks = static_cast<double>(np) / 10;
    r.rows.push_back(row);
  }
  const std::string md = EmitReport(r, ReportFormat::kMarkdown);
  EXPECT_NE(md.find("| nPivot | Messages | RacheEnc (ms) | Ratio over CkksEnc |"),
            std::string::npos);
  EXPECT_NE(md.find("| 8 | 40 | 8.000 | 0.80 |"), std::string::npos);
  EXPECT_NE(md.find("Overall Time (ms)"), std::string::npos);
  EXPECT_NE(md.find("Time / Message (ms)"), std::string::npos);
  EXPECT_NE(md.find("- seed: 3"), std::string::npos);
  EXPECT_EQ(md, EmitReport(r, ReportFormat::kMarkdown));
}

TEST(Report, FailedRowsAndQuoting) {
  BenchReport r = SampleReport();
  r.rows[0].status = RowStatus::kFailed;
  r.rows[0].detail = "value 1,5 out of range";
  const std::string csv = EmitReport(r, ReportFormat::kCsv);
  EXPECT_NE(csv.find("smuche,0,40,,,,,,,failed,\"value 1,5 out of range\""), std::string::npos);
  EXPECT_THROW(ParseReportFormat("json"), ParameterError);
  EXPECT_EQ(ParseReportFormat("csv"), ReportFormat::kCsv);
}

BenchConfig SmallConfig() {
  BenchConfig c;
  c.schemes = {Scheme::kCkks, Scheme::kRache, Scheme::kSmuche};
  c.params = ring::Params::Default(5);
  c.n_pivots = {8};
  c.workload = GenSynthetic(SyntheticSpec::Parse("integers(0,100)"), 6, 5);
  c.repeat = 5;
  c.seed = 5;
  return c;
}

TEST(Runner, RowsAreVerifiedAndCountsAreDeterministic) {
  const BenchConfig config = SmallConfig();
  const BenchReport a = RunBenchmark(config);
  ASSERT_EQ(a.rows.size(), 3u);
  EXPECT_TRUE(a.Correct());
  for (const BenchRow& row : a.rows) {
    EXPECT_EQ(row.status, RowStatus::kOk) << row.detail;
    EXPECT_EQ(row.messages, 6u);
    EXPECT_LE(row.max_abs_error, row.error_bound);
    EXPECT_DOUBLE_EQ(row.per_message_ms, row.total_ms / 6);
    EXPECT_GT(row.ratio_over_ckks, 0.0);
  }
  EXPECT_EQ(a.rows[0].ring_ops, 6u * 5);  // ckks: 2 products, 3 additions
  EXPECT_EQ(a.rows[2].ring_ops, 6u * 6);  // smuche: 2 scalar, 2 products, 2 additions
  const BenchReport b = RunBenchmark(config);
  const EmitOptions no_timing{.include_timing = false};
  EXPECT_EQ(EmitReport(a, ReportFormat::kCsv, no_timing),
            EmitReport(b, ReportFormat::kCsv, no_timing));
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    EXPECT_EQ(a.rows[i].ring_ops, b.rows[i].ring_ops);
  }
}

TEST(Runner, RacheOverflowIsRecordedPerRow) {
  BenchConfig config = SmallConfig();
  config.workload.values = {1, 500, 3};  // 500 >= 2^7
  config.n_pivots = {8, 16};
  const BenchReport r = RunBenchmark(config);
  ASSERT_EQ(r.rows.size(), 4u);
  EXPECT_EQ(r.rows[1].status, RowStatus::kFailed);
  EXPECT_EQ(r.rows[2].status, RowStatus::kOk);
  EXPECT_EQ(r.rows[3].status, RowStatus::kOk);
  EXPECT_TRUE(r.Correct());

  config.workload.values = {-1, 2};
  const BenchReport neg = RunBenchmark(config);
  EXPECT_EQ(neg.rows[1].status, RowStatus::kFailed);
  EXPECT_EQ(neg.rows[0].status, RowStatus::kOk);
}

TEST(Runner, MessageCountsAndPivotSpace) {
  BenchConfig config = SmallConfig();
  config.schemes = {Scheme::kSmuche};
  config.message_counts = {2, 4};
  const BenchReport r = RunBenchmark(config);
  ASSERT_EQ(r.rows.size(), 2u);
  EXPECT_EQ(r.rows[0].messages, 2u);
  EXPECT_EQ(r.rows[1].messages, 4u);

  config.schemes = {Scheme::kCkks, Scheme::kRache};
  config.message_counts = {};
  config.pivot_space_count = 3;
  config.n_pivots = {4, 8};
  const BenchReport p = RunBenchmark(config);
  ASSERT_EQ(p.rows.size(), 4u);
  EXPECT_EQ(p.rows[3].n_pivot, 8u);
  EXPECT_TRUE(p.Correct());
}

TEST(Runner, InvalidConfigs) {
  BenchConfig config = SmallConfig();
  config.repeat = 4;
  EXPECT_THROW(RunBenchmark(config), ParameterError);
  config = SmallConfig();
  config.message_counts = {7};
  EXPECT_THROW(RunBenchmark(config), ParameterError);
  config = SmallConfig();
  config.schemes.clear();
  EXPECT_THROW(RunBenchmark(config), ParameterError);
  config = SmallConfig();
  config.n_pivots.clear();
  EXPECT_THROW(RunBenchmark(config), ParameterError);
  EXPECT_THROW(ParseScheme("bfv"), ParameterError);
}

}  // namespace
}  // namespace hecache::bench
