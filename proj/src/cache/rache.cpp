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

#include "hecache/cache/rache.hpp"

#include <algorithm>
#include <string>

#include "hecache/errors.hpp"

namespace hecache::rache {
namespace {

constexpr u128 kSaturated = ~static_cast<u128>(0);

// r^k, saturating at 2^128 - 1.
u128 SaturatingPow(std::uint32_t r, std::size_t k) {
  u128 v = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (v > kSaturated / r) return kSaturated;
    v *= r;
  }
  return v;
}

}  // namespace

RachePivotCache::RachePivotCache(std::vector<he::Ciphertext> pivots, std::uint32_t radix)
    : pivots_(std::move(pivots)), radix_(radix) {
  if (pivots_.size() < 2) throw ParameterError("Rache needs at least two pivots");
  if (radix_ < 2) throw ParameterError("radix must be at least 2");
}

u128 RachePivotCache::PlaintextBound() const { return SaturatingPow(radix_, size() - 1); }

RachePivotCache Precompute(const he::PublicKey& pk, std::size_t n_pivot, ring::RandomSource& rng) {
  const ring::Params& params = pk.ring()->params();
  if (n_pivot < 2) {
    throw ParameterError("nPivot must be at least 2 (randomization pairs pivots i and i+1)");
  }
  std::vector<he::Ciphertext> pivots;
  pivots.reserve(n_pivot);
  u128 power = 1;
  for (std::size_t i = 0; i < n_pivot; ++i) {
    if (i > 0) {
      if (power > kSaturated / params.radix) {
        throw ParameterError("pivot r^" + std::to_string(i) + " exceeds 128 bits");
      }
      power *= params.radix;
    }
    he::Poly encoded = [&] {
      try {
        return he::EncodeInteger(static_cast<i128>(power), params.delta, pk.ring());
      } catch (const OverflowError&) {
        throw ParameterError("top pivot r^" + std::to_string(n_pivot - 1) +
                             " times delta does not fit below q/4");
      }
    }();
    pivots.push_back(he::EncryptEncoded(pk, encoded, params.delta, rng));
  }
  return RachePivotCache(std::move(pivots), params.radix);
}

std::vector<std::uint32_t> DigitDecompose(u128 m, std::uint32_t radix, std::size_t n_pivot) {
  if (radix < 2) throw ParameterError("radix must be at least 2");
  if (m >= SaturatingPow(radix, n_pivot)) {
    throw RangeError("plaintext " + ToString(m) + " needs more than " + std::to_string(n_pivot) +
                     " base-" + std::to_string(radix) + " digits");
  }
  std::vector<std::uint32_t> digits;
  while (m != 0) {
    digits.push_back(static_cast<std::uint32_t>(m % radix));
    m /= radix;
  }
  return digits;
}

he::Ciphertext Construct(const RachePivotCache& cache, const std::vector<std::uint32_t>& digits) {
  if (digits.size() > cache.size()) {
    throw RangeError(std::to_string(digits.size()) + " digits but only " +
                     std::to_string(cache.size()) + " pivots");
  }
  he::Ciphertext acc = he::ZeroCiphertext(cache.ring(), cache.scale(), cache.pivot(0).form());
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] >= cache.radix()) throw RangeError("digit not below the radix");
    if (digits[i] == 0) continue;
    acc = he::Add(acc, he::ScalarMul(digits[i], cache.pivot(i)));
  }
  return acc;
}

he::Ciphertext Randomize(const RachePivotCache& cache, const he::Ciphertext& cprime,
                         std::size_t top_idx, ring::RandomSource& rng) {
  if (top_idx + 1 >= cache.size()) {
    throw RangeError("mask index " + std::to_string(top_idx) + " needs pivot " +
                     std::to_string(top_idx + 1) + " of " + std::to_string(cache.size()));
  }
  std::vector<std::uint8_t> bits(top_idx);
  rng.FillBits(bits);
  const i128 r = cache.radix();
  he::Ciphertext c = cprime;
  for (std::size_t i = 0; i < top_idx; ++i) {
    const he::Ciphertext zero_term =
        he::Sub(cache.pivot(i + 1), he::ScalarMul(r, cache.pivot(i)));
    c = he::Add(c, he::ScalarMul(bits[i], zero_term));
  }
  return c;
}

std::size_t MaskTermsFor(const RachePivotCache& cache, std::size_t digit_count) {
  const std::size_t cap = cache.size() - 2;
  return std::min(std::max<std::size_t>(digit_count, 1), cap);
}

he::Ciphertext Encrypt(const RachePivotCache& cache, u128 m, ring::RandomSource& rng) {
  if (m >= cache.PlaintextBound()) {
    throw RangeError("plaintext " + ToString(m) + " is not below r^(nPivot-1) = " +
                     ToString(cache.PlaintextBound()));
  }
  const auto digits = DigitDecompose(m, cache.radix(), cache.size() - 1);
  const he::Ciphertext cprime = Construct(cache, digits);
  return Randomize(cache, cprime, MaskTermsFor(cache, digits.size()), rng);
}

}  // namespace hecache::rache
