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

#ifndef HECACHE_RING_NTT_HPP_
#define HECACHE_RING_NTT_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hecache/modulus.hpp"

namespace hecache::ring {

// Negacyclic number-theoretic transform over Z_q[X]/(X^N + 1).
//
// Forward is Cooley-Tukey (natural order in, bit-reversed out) with the
// 2N-th root psi folded into the twiddles; Inverse is Gentleman-Sande and
// undoes it. Pointwise products in the bit-reversed domain correspond to
// negacyclic convolution.
class NttTables {
 public:
  // Returns nullopt unless q is prime-like with q == 1 (mod 2N); the caller
  // then falls back to schoolbook multiplication.
  static std::optional<NttTables> Create(const Modulus& mod, std::size_t n);

  std::size_t size() const { return n_; }

  void Forward(std::span<u128> a) const;
  void Inverse(std::span<u128> a) const;
  // Inverse of a pointwise MontMul product: removes the extra 2^-128.
  void InverseFromMontProduct(std::span<u128> a) const;

  const Modulus& modulus() const { return mod_; }

 private:
  NttTables(const Modulus& mod, std::size_t n) : mod_(mod), n_(n) {}
  void InverseScaled(std::span<u128> a, u128 scale_mont) const;

  Modulus mod_;
  std::size_t n_;
  std::vector<u128> psi_rev_;      // Montgomery form, bit-reversed powers of psi
  std::vector<u128> psi_inv_rev_;  // Montgomery form, bit-reversed powers of psi^-1
  u128 n_inv_mont_ = 0;            // N^-1 in Montgomery form
  u128 n_inv_r_mont_ = 0;          // N^-1 * 2^128 in Montgomery form
};

}  // namespace hecache::ring

#endif  // HECACHE_RING_NTT_HPP_
