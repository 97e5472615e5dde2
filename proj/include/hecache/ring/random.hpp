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

#ifndef HECACHE_RING_RANDOM_HPP_
#define HECACHE_RING_RANDOM_HPP_

#include <cstdint>
#include <memory>
#include <random>
#include <span>

namespace hecache::ring {

// Source of randomness handed explicitly to every sampling call. Streams are
// single-owner; use Split() to derive an independent stream per thread.
//
// The batch interface lets tests substitute degenerate sources (all-zero
// ternary draws, scripted bits) without touching the samplers.
class RandomSource {
 public:
  virtual ~RandomSource() = default;

  // Uniform 64-bit words.
  virtual void FillWords(std::span<std::uint64_t> out) = 0;
  // Uniform over {-1, 0, +1}.
  virtual void FillTernary(std::span<std::int8_t> out) = 0;
  // Standard normal draws.
  virtual void FillNormal(std::span<double> out) = 0;
  // Uniform over {0, 1}.
  virtual void FillBits(std::span<std::uint8_t> out) = 0;

  virtual std::unique_ptr<RandomSource> Split() = 0;
};

// mt19937_64-backed stream. Identical seeds give identical output.
class SeededStream final : public RandomSource {
 public:
  explicit SeededStream(std::uint64_t seed);
  explicit SeededStream(std::seed_seq& seq);

  void FillWords(std::span<std::uint64_t> out) override;
  void FillTernary(std::span<std::int8_t> out) override;
  void FillNormal(std::span<double> out) override;
  void FillBits(std::span<std::uint8_t> out) override;
  std::unique_ptr<RandomSource> Split() override;

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_;
};

}  // namespace hecache::ring

#endif  // HECACHE_RING_RANDOM_HPP_
