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

#ifndef HECACHE_RING_PARAMS_HPP_
#define HECACHE_RING_PARAMS_HPP_

#include <cstddef>
#include <cstdint>
#include <string>

#include "hecache/uint128.hpp"

namespace hecache::ring {

// Scheme parameters. Validate() enforces:
//   N a power of two, N >= 8;
//   q odd, below 2^126, and q > 2 * delta^2;
//   sigma > 0, radix >= 2.
struct Params {
  std::size_t n = 0;
  u128 q = 0;
  u128 delta = 0;
  double sigma = 3.2;
  std::uint32_t radix = 2;
  std::uint64_t seed = 0;

  void Validate() const;

  // N = 4096, q = 2^125 - 2^18 + 1 (prime, NTT-friendly up to N = 2^17),
  // delta = 2^50.
  static Params Default(std::uint64_t seed = 0);
  // N = 8, q = 12289, delta = 2^6. Small enough for brute-force oracles.
  static Params Desk(std::uint64_t seed = 0);
  // "default" or "desk"; throws ParameterError otherwise.
  static Params FromProfile(const std::string& name, std::uint64_t seed = 0);

  bool SameRing(const Params& other) const { return n == other.n && q == other.q; }
  bool operator==(const Params& other) const = default;
};

}  // namespace hecache::ring

#endif  // HECACHE_RING_PARAMS_HPP_
