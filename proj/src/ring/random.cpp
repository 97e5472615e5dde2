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

#include "hecache/ring/random.hpp"

#include <array>

namespace hecache::ring {

SeededStream::SeededStream(std::uint64_t seed) : engine_(seed) {}

SeededStream::SeededStream(std::seed_seq& seq) : engine_(seq) {}

void SeededStream::FillWords(std::span<std::uint64_t> out) {
  for (auto& w : out) w = engine_();
}

void SeededStream::FillTernary(std::span<std::int8_t> out) {
  // Two bits per draw; 0b11 is rejected so the three outcomes stay uniform.
  std::size_t i = 0;
  while (i < out.size()) {
    std::uint64_t word = engine_();
    for (int k = 0; k < 32 && i < out.size(); ++k, word >>= 2) {
      const auto v = static_cast<unsigned>(word & 3);
      if (v == 3) continue;
      out[i++] = v == 0 ? std::int8_t{0} : (v == 1 ? std::int8_t{1} : std::int8_t{-1});
    }
  }
}

void SeededStream::FillNormal(std::span<double> out) {
  for (auto& x : out) x = normal_(engine_);
}

void SeededStream::FillBits(std::span<std::uint8_t> out) {
  std::size_t i = 0;
  while (i < out.size()) {
    std::uint64_t word = engine_();
    for (int k = 0; k < 64 && i < out.size(); ++k, word >>= 1) {
      out[i++] = static_cast<std::uint8_t>(word & 1);
    }
  }
}

std::unique_ptr<RandomSource> SeededStream::Split() {
  // seed_seq consumes 32-bit values.
  std::array<std::uint32_t, 8> material;
  for (std::size_t i = 0; i < material.size(); i += 2) {
    const std::uint64_t w = engine_();
    material[i] = static_cast<std::uint32_t>(w);
    material[i + 1] = static_cast<std::uint32_t>(w >> 32);
  }
  std::seed_seq seq(material.begin(), material.end());
  return std::make_unique<SeededStream>(seq);
}

}  // namespace hecache::ring
