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

// Test doubles and brute-force oracles shared by the unit tests.

#ifndef HECACHE_TESTS_SUPPORT_HPP_
#define HECACHE_TESTS_SUPPORT_HPP_

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <deque>
#include <memory>
#include <span>
#include <vector>

#include "hecache/ring/poly.hpp"
#include "hecache/ring/random.hpp"

namespace hecache::testing {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt ToBig(u128 x) {
  BigInt v = static_cast<std::uint64_t>(x >> 64);
  v <<= 64;
  v += static_cast<std::uint64_t>(x);
  return v;
}

inline u128 FromBig(const BigInt& v) {
  const BigInt lo_mask = (BigInt(1) << 64) - 1;
  const auto lo = static_cast<std::uint64_t>(v & lo_mask);
  const auto hi = static_cast<std::uint64_t>(v >> 64);
  return (static_cast<u128>(hi) << 64) | lo;
}

// Direct O(N^2) product in Z_q[X]/(X^N + 1) with arbitrary-precision
// accumulation.
inline std::vector<u128> NegacyclicOracle(std::span<const u128> a, std::span<const u128> b,
                                          u128 q) {
  const std::size_t n = a.size();
  std::vector<BigInt> acc(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const BigInt ai = ToBig(a[i]);
    for (std::size_t j = 0; j < n; ++j) {
      const BigInt prod = ai * ToBig(b[j]);
      if (i + j < n) {
        acc[i + j] += prod;
      } else {
        acc[i + j - n] -= prod;
      }
    }
  }
  const BigInt big_q = ToBig(q);
  std::vector<u128> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    BigInt r = acc[k] % big_q;
    if (r < 0) r += big_q;
    out[k] = FromBig(r);
  }
  return out;
}

inline std::vector<u128> Coeffs(const ring::Poly& p) {
  return {p.coeffs().begin(), p.coeffs().end()};
}

// Every draw is zero: uniform words 0, ternary 0, normal 0, bits 0.
class ZeroSource final : public ring::RandomSource {
 public:
  void FillWords(std::span<std::uint64_t> out) override { std::fill(out.begin(), out.end(), 0); }
  void FillTernary(std::span<std::int8_t> out) override { std::fill(out.begin(), out.end(), 0); }
  void FillNormal(std::span<double> out) override { std::fill(out.begin(), out.end(), 0.0); }
  void FillBits(std::span<std::uint8_t> out) override { std::fill(out.begin(), out.end(), 0); }
  std::unique_ptr<ring::RandomSource> Split() override { return std::make_unique<ZeroSource>(); }
};

// Delegates to a seeded stream except for FillBits, which replays a script
// (and then zeros once the script runs out).
class ScriptedBits final : public ring::RandomSource {
 public:
  ScriptedBits(std::vector<std::uint8_t> bits, std::uint64_t seed)
      : bits_(bits.begin(), bits.end()), inner_(seed) {}

  void FillWords(std::span<std::uint64_t> out) override { inner_.FillWords(out); }
  void FillTernary(std::span<std::int8_t> out) override { inner_.FillTernary(out); }
  void FillNormal(std::span<double> out) override { inner_.FillNormal(out); }
  void FillBits(std::span<std::uint8_t> out) override {
    for (auto& b : out) {
      if (bits_.empty()) {
        b = 0;
      } else {
        b = bits_.front();
        bits_.pop_front();
      }
    }
  }
  std::unique_ptr<ring::RandomSource> Split() override { return inner_.Split(); }

 private:
  std::deque<std::uint8_t> bits_;
  ring::SeededStream inner_;
};

// Ring with q = 17, N = 8 and a scale small enough to satisfy q > 2 delta^2.
inline ring::Params TinyParams() {
  ring::Params p;
  p.n = 8;
  p.q = 17;
  p.delta = 2;
  return p;
}

// Default modulus at a small degree: full-width arithmetic, cheap oracles.
inline ring::Params WideParams(std::size_t n) {
  ring::Params p = ring::Params::Default();
  p.n = n;
  return p;
}

}  // namespace hecache::testing

#endif  // HECACHE_TESTS_SUPPORT_HPP_
