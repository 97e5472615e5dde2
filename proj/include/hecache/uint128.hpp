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

// 128-bit integer helpers. Coefficients live in unsigned __int128 so that
// moduli up to 2^126 fit without a bignum dependency.

#ifndef HECACHE_UINT128_HPP_
#define HECACHE_UINT128_HPP_

#include <cstdint>
#include <string>
#include <string_view>

namespace hecache {

using u128 = unsigned __int128;
using i128 = __int128;

struct Wide256 {
  u128 hi;
  u128 lo;
};

// Full 128x128 -> 256 product.
inline Wide256 MulWide(u128 a, u128 b) {
  const std::uint64_t a0 = static_cast<std::uint64_t>(a);
  const std::uint64_t a1 = static_cast<std::uint64_t>(a >> 64);
  const std::uint64_t b0 = static_cast<std::uint64_t>(b);
  const std::uint64_t b1 = static_cast<std::uint64_t>(b >> 64);

  const u128 p00 = static_cast<u128>(a0) * b0;
  const u128 p01 = static_cast<u128>(a0) * b1;
  const u128 p10 = static_cast<u128>(a1) * b0;
  const u128 p11 = static_cast<u128>(a1) * b1;

  const u128 mid = (p00 >> 64) + static_cast<std::uint64_t>(p01) +
                   static_cast<std::uint64_t>(p10);
  Wide256 r;
  r.lo = (mid << 64) | static_cast<std::uint64_t>(p00);
  r.hi = p11 + (p01 >> 64) + (p10 >> 64) + (mid >> 64);
  return r;
}

inline int BitLength(u128 x) {
  const auto hi = static_cast<std::uint64_t>(x >> 64);
  if (hi != 0) return 128 - __builtin_clzll(hi);
  const auto lo = static_cast<std::uint64_t>(x);
  if (lo != 0) return 64 - __builtin_clzll(lo);
  return 0;
}

inline u128 Pow2(int k) { return static_cast<u128>(1) << k; }

std::string ToString(u128 x);
std::string ToString(i128 x);

// Parses a decimal, or a 0x-prefixed hexadecimal, unsigned integer.
// Throws ParameterError on malformed input or overflow.
u128 ParseU128(std::string_view text);

}  // namespace hecache

#endif  // HECACHE_UINT128_HPP_
