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

#include "hecache/ring/ntt.hpp"

#include <array>
#include <cassert>

namespace hecache::ring {
namespace {

bool IsProbablePrime(const Modulus& mod) {
  const u128 q = mod.value();
  u128 d = q - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  constexpr std::array<unsigned, 16> kBases = {2,  3,  5,  7,  11, 13, 17, 19,
                                               23, 29, 31, 37, 41, 43, 47, 53};
  for (unsigned base : kBases) {
    const u128 a = base % q;
    if (a == 0) continue;
    u128 x = mod.Pow(a, d);
    if (x == 1 || x == q - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = mod.Mul(x, x);
      if (x == q - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::size_t BitReverse(std::size_t x, int bits) {
  std::size_t r = 0;
  for (int i = 0; i < bits; ++i) {
    r = (r << 1) | (x & 1);
    x >>= 1;
  }
  return r;
}

}  // namespace

std::optional<NttTables> NttTables::Create(const Modulus& mod, std::size_t n) {
  const u128 q = mod.value();
  const u128 two_n = static_cast<u128>(2) * n;
  if (n < 2 || (n & (n - 1)) != 0 || (q - 1) % two_n != 0) return std::nullopt;
  if (!IsProbablePrime(mod)) return std::nullopt;

  // A primitive 2N-th root satisfies psi^N == -1.
  const u128 exponent = (q - 1) / two_n;
  u128 psi = 0;
  for (u128 candidate = 2; candidate < q; ++candidate) {
    const u128 w = mod.Pow(candidate, exponent);
    if (mod.Pow(w, n) == q - 1) {
      psi = w;
      break;
    }
  }
  if (psi == 0) return std::nullopt;

  int log_n = 0;
  while ((std::size_t{1} << log_n) < n) ++log_n;

  NttTables t(mod, n);
  t.psi_rev_.resize(n);
  t.psi_inv_rev_.resize(n);
  const u128 psi_inv = mod.Inverse(psi);
  u128 pw = 1;
  u128 pw_inv = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = BitReverse(i, log_n);
    t.psi_rev_[j] = mod.ToMont(pw);
    t.psi_inv_rev_[j] = mod.ToMont(pw_inv);
    pw = mod.Mul(pw, psi);
    pw_inv = mod.Mul(pw_inv, psi_inv);
  }
  const u128 n_inv = mod.Inverse(static_cast<u128>(n));
  t.n_inv_mont_ = mod.ToMont(n_inv);
  t.n_inv_r_mont_ = mod.ToMont(mod.ToMont(n_inv));
  return t;
}

void NttTables::Forward(std::span<u128> a) const {
  assert(a.size() == n_);
  const Modulus& mod = mod_;
  std::size_t t = n_;
  for (std::size_t m = 1; m < n_; m <<= 1) {
    t >>= 1;
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t j1 = 2 * i * t;
      const u128 w = psi_rev_[m + i];
      for (std::size_t j = j1; j < j1 + t; ++j) {
        const u128 u = a[j];
        const u128 v = mod.MontMul(a[j + t], w);
        a[j] = mod.Add(u, v);
        a[j + t] = mod.Sub(u, v);
      }
    }
  }
}

void NttTables::InverseScaled(std::span<u128> a, u128 scale_mont) const {
  assert(a.size() == n_);
  const Modulus& mod = mod_;
  std::size_t t = 1;
  for (std::size_t m = n_; m > 1; m >>= 1) {
    const std::size_t h = m >> 1;
    std::size_t j1 = 0;
    for (std::size_t i = 0; i < h; ++i) {
      const u128 w = psi_inv_rev_[h + i];
      for (std::size_t j = j1; j < j1 + t; ++j) {
        const u128 u = a[j];
        const u128 v = a[j + t];
        a[j] = mod.Add(u, v);
        a[j + t] = mod.MontMul(mod.Sub(u, v), w);
      }
      j1 += 2 * t;
    }
    t <<= 1;
  }
  for (auto& x : a) x = mod.MontMul(x, scale_mont);
}

void NttTables::Inverse(std::span<u128> a) const { InverseScaled(a, n_inv_mont_); }

void NttTables::InverseFromMontProduct(std::span<u128> a) const {
  InverseScaled(a, n_inv_r_mont_);
}

}  // namespace hecache::ring
