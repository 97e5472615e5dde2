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

// Radix-additive ciphertext caching.
//
// Precompute: pivots[i] = enc(r^i) for i in [0, nPivot).
// Construct:  enc(m) = sum_i d_i (.) pivots[i] over the base-r digits of m.
// Randomize:  c = c' + sum_{i < top} b_i (.) (pivots[i+1] - r (.) pivots[i]),
//             b_i uniform bits. Every mask term encrypts r^(i+1) - r * r^i = 0.
//
// Encryption cost grows with the number of digits of m, i.e. with the size of
// the plaintext space the cache has to cover.

#ifndef HECACHE_CACHE_RACHE_HPP_
#define HECACHE_CACHE_RACHE_HPP_

#include <cstdint>
#include <vector>

#include "hecache/he/scheme.hpp"

namespace hecache::rache {

class RachePivotCache {
 public:
  RachePivotCache(std::vector<he::Ciphertext> pivots, std::uint32_t radix);

  const std::vector<he::Ciphertext>& pivots() const { return pivots_; }
  const he::Ciphertext& pivot(std::size_t i) const { return pivots_.at(i); }
  std::uint32_t radix() const { return radix_; }
  std::size_t size() const { return pivots_.size(); }
  const he::RingPtr& ring() const { return pivots_.front().ring(); }
  u128 scale() const { return pivots_.front().scale(); }

  // Exclusive upper bound on plaintexts Encrypt accepts: r^(nPivot-1),
  // saturated at 2^128 - 1.
  u128 PlaintextBound() const;

 private:
  std::vector<he::Ciphertext> pivots_;
  std::uint32_t radix_;
};

// Encrypts r^i at the ring's delta for i in [0, n_pivot), radix from params.
// Throws ParameterError for n_pivot < 2 or when r^(n_pivot-1) * delta does
// not fit below q/4.
RachePivotCache Precompute(const he::PublicKey& pk, std::size_t n_pivot,
                           ring::RandomSource& rng);

// Base-r digits of m, least significant first, no trailing zeros (m = 0 gives
// an empty list). Throws RangeError if m >= r^n_pivot.
std::vector<std::uint32_t> DigitDecompose(u128 m, std::uint32_t radix, std::size_t n_pivot);

// sum_i digits[i] (.) pivots[i], zero digits skipped. An empty list yields the
// noiseless zero ciphertext. Throws RangeError if there are more digits than
// pivots or a digit is not below the radix.
he::Ciphertext Construct(const RachePivotCache& cache, const std::vector<std::uint32_t>& digits);

// Adds top_idx mask terms drawn from rng.FillBits. Throws RangeError unless
// top_idx + 1 < nPivot.
he::Ciphertext Randomize(const RachePivotCache& cache, const he::Ciphertext& cprime,
                         std::size_t top_idx, ring::RandomSource& rng);

// Mask terms Encrypt uses for a message with `digit_count` digits:
// clamp(digit_count, 1, nPivot - 2). A zero message still gets one term.
std::size_t MaskTermsFor(const RachePivotCache& cache, std::size_t digit_count);

// Full pipeline. Throws RangeError if m >= PlaintextBound().
he::Ciphertext Encrypt(const RachePivotCache& cache, u128 m, ring::RandomSource& rng);

}  // namespace hecache::rache

#endif  // HECACHE_CACHE_RACHE_HPP_
