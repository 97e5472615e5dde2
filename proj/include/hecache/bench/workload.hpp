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

#ifndef HECACHE_BENCH_WORKLOAD_HPP_
#define HECACHE_BENCH_WORKLOAD_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace hecache::bench {

enum class WorkloadSource { kCsv, kSynthetic };

// Values to encrypt plus the finest fractional step they need. Every value is
// a multiple of precision_inv.
struct Workload {
  std::vector<double> values;
  double precision_inv = 1.0;
  std::string name;
  WorkloadSource source = WorkloadSource::kSynthetic;
  // Rows skipped because the selected cell did not parse as a number.
  std::size_t skipped_rows = 0;
};

// Reads a comma-separated file with a header row and selects `column` by
// name, or by zero-based index when no header cell matches and the text is
// an integer. Unparseable cells are skipped and counted.
//
// precision_inv is r^-k for the smallest k such that every value is a
// multiple of r^-k, capped at the first r^-k not coarser than the value's
// decimal resolution (0.1 has no finite binary expansion and gets 1/16).
//
// Errors: IoError if the file cannot be read, FormatError for a missing
// column or zero parseable rows.
Workload LoadDataset(const std::filesystem::path& path, std::string_view column,
                     std::uint32_t radix = 2);

// Distribution descriptor for synthetic workloads.
//   uniform(lo,hi)      reals in [lo, hi) quantized down to r^-6
//   uniform(lo,hi,k)    same with r^-k
//   integers(lo,hi)     integers in [lo, hi)
//   pivotspace          integers in [0, r^(nPivot-1)); resolved per nPivot by
//                       the runner
// Bounds accept plain numbers, scientific notation and a^b (e.g. 10^12).
struct SyntheticSpec {
  enum class Kind { kUniform, kIntegers, kPivotSpace };
  Kind kind = Kind::kUniform;
  double lo = 0.0;
  double hi = 1.0;
  int fractional_digits = 6;

  // Throws ParameterError on malformed text.
  static SyntheticSpec Parse(std::string_view text);
  std::string ToString() const;
};

// Throws ParameterError for count == 0 or kPivotSpace (use GenPivotSpace).
Workload GenSynthetic(const SyntheticSpec& spec, std::size_t count, std::uint64_t seed,
                      std::uint32_t radix = 2);

// Integers uniform in [0, r^(n_pivot-1)), the plaintext space a Rache cache of
// n_pivot pivots covers. Bounds above 2^63 are clamped to 2^63.
Workload GenPivotSpace(std::size_t n_pivot, std::size_t count, std::uint64_t seed,
                       std::uint32_t radix = 2);

// Smallest r^-k, k <= max_digits, such that value is a multiple of it; falls
// back to r^-max_digits.
double BinaryPrecisionOf(double value, std::uint32_t radix, int max_digits);

}  // namespace hecache::bench

#endif  // HECACHE_BENCH_WORKLOAD_HPP_
