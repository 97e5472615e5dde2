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

#ifndef HECACHE_BENCH_RUNNER_HPP_
#define HECACHE_BENCH_RUNNER_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hecache/bench/workload.hpp"
#include "hecache/ring/params.hpp"

namespace hecache::bench {

enum class Scheme { kCkks, kRache, kSmuche };

std::string SchemeName(Scheme s);
// Accepts "ckks", "rache", "smuche". Throws ParameterError otherwise.
Scheme ParseScheme(std::string_view name);

enum class RowStatus {
  kOk,
  kDecryptError,  // some decryption exceeded its error bound
  kFailed,        // the scheme rejected the configuration or a value
};

struct BenchRow {
  Scheme scheme = Scheme::kCkks;
  // 0 for schemes whose cost does not depend on nPivot.
  std::size_t n_pivot = 0;
  std::size_t messages = 0;
  double total_ms = 0.0;         // median over repeats
  double per_message_ms = 0.0;   // total_ms / messages
  std::uint64_t ring_ops = 0;    // poly add + mul + scalar mul, one pass
  double max_abs_error = 0.0;    // over every repeat
  double error_bound = 0.0;      // largest per-message bound checked
  double ratio_over_ckks = 0.0;  // total_ms over the matching CKKS row; 0 if none
  RowStatus status = RowStatus::kOk;
  std::string detail;            // failure reason
};

struct BenchReport {
  std::vector<BenchRow> rows;
  ring::Params params;
  std::uint64_t seed = 0;
  std::size_t repeat = 0;
  std::string workload;

  // True when no row has a decryption error. Failed rows do not count.
  bool Correct() const;
};

struct BenchConfig {
  std::vector<Scheme> schemes;
  ring::Params params;
  std::vector<std::size_t> n_pivots;
  // Each count encrypts the first N workload values. Empty means all of them.
  std::vector<std::size_t> message_counts;
  Workload workload;
  // When nonzero, the workload is replaced per nPivot by GenPivotSpace with
  // this many values, and every scheme gets a row per nPivot.
  std::size_t pivot_space_count = 0;
  std::size_t repeat = 5;
  std::uint64_t seed = 0;
};

// Times each scheme over the workload. Keys and caches are built outside the
// timed region; the clock covers the encryption calls only. Single-threaded.
//
// Per-message error bounds, with tol = NoiseTolerance(params):
//   ckks    tol
//   smuche  (|z| + 1) * tol
//   rache   (digit sum + (r + 1) * mask terms + 1) * tol * precision_inv
//
// Rache encrypts round(v / precision_inv) and reports decryptions scaled back.
// Throws ParameterError for an invalid config (repeat < 5, no schemes, empty
// workload, message count above the workload size, Rache without nPivot).
BenchReport RunBenchmark(const BenchConfig& config);

}  // namespace hecache::bench

#endif  // HECACHE_BENCH_RUNNER_HPP_
