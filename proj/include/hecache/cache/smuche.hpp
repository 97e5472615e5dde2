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

// Scalar-multiplicative ciphertext caching.
//
// The cache holds enc(r^-i) for i = 0 .. k, where r^-k is the finest
// precision the workload needs. A message m at precision r^-idx becomes
//
//   c' = z (.) cache[idx],     z = round(m * r^idx)
//   c  = c' + (pk1 * xi, pk2 * xi),   xi ternary
//
// Decryption of c yields z * r^-idx: the rnd pair is itself an encryption of
// zero with no e1/e2 term, so c1 + c2 * s only picks up e * xi beyond the
// scaled pivot noise. Encryption costs two scalar multiplications, two ring
// products and two additions whatever m or the cache size.

#ifndef HECACHE_CACHE_SMUCHE_HPP_
#define HECACHE_CACHE_SMUCHE_HPP_

#include <cstdint>
#include <vector>

#include "hecache/he/scheme.hpp"

namespace hecache::smuche {

class SmuchePivotCache {
 public:
  SmuchePivotCache(std::vector<he::Ciphertext> pivots, std::uint32_t radix);

  const std::vector<he::Ciphertext>& pivots() const { return pivots_; }
  const he::Ciphertext& pivot(std::size_t i) const { return pivots_.at(i); }
  std::uint32_t radix() const { return radix_; }
  std::size_t size() const { return pivots_.size(); }
  // Largest cached exponent: pivots_[max_idx()] = enc(r^-max_idx).
  std::size_t max_idx() const { return pivots_.size() - 1; }
  const he::RingPtr& ring() const { return pivots_.front().ring(); }

 private:
  std::vector<he::Ciphertext> pivots_;
  std::uint32_t radix_;
};

// Walks pivot = 1, 1/r, 1/r^2, ... while pivot >= delta_inv, caching
// enc(r^-i) at the ring's delta. delta_inv must be r^-k for some k >= 0 with
// r^k <= delta; otherwise ParameterError.
SmuchePivotCache Precompute(const he::PublicKey& pk, double delta_inv, ring::RandomSource& rng);

// Smallest idx with r^-idx <= precision_inv. Throws RangeError if that idx
// exceeds max_idx, ParameterError for non-positive precision.
std::size_t SelectPivot(double precision_inv, std::uint32_t radix, std::size_t max_idx);

// Largest |z| a single scalar multiplication accepts:
// floor(q / (4 * delta * N * (6 sigma)^2 * 8)).
u128 MaxScalar(const ring::Params& params);

// round(m * r^idx) for the pivot SelectPivot picks.
i128 ScalarFor(double m, std::uint32_t radix, std::size_t idx);

// z (.) cache[idx]. Throws RangeError if |z| > MaxScalar.
he::Ciphertext Construct(const SmuchePivotCache& cache, double m, double precision_inv);

// cprime + (pk1 * xi, pk2 * xi), xi drawn ternary from rng.
he::Ciphertext Randomize(const he::PublicKey& pk, const he::Ciphertext& cprime,
                         ring::RandomSource& rng);

he::Ciphertext Encrypt(const SmuchePivotCache& cache, const he::PublicKey& pk, double m,
                       double precision_inv, ring::RandomSource& rng);

}  // namespace hecache::smuche

#endif  // HECACHE_CACHE_SMUCHE_HPP_
