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

#ifndef HECACHE_MODULUS_HPP_
#define HECACHE_MODULUS_HPP_

#include "hecache/uint128.hpp"

namespace hecache {

// Arithmetic in Z_q for an odd q < 2^126, with Montgomery multiplication
// over R = 2^128. All inputs and outputs are canonical residues in [0, q)
// unless a method says otherwise.
class Modulus {
 public:
  static constexpr int kMaxBits = 126;

  explicit Modulus(u128 q);

  u128 value() const { return q_; }
  int bits() const { return BitLength(q_); }

  u128 Add(u128 a, u128 b) const {
    u128 s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  u128 Sub(u128 a, u128 b) const { return a >= b ? a - b : a + (q_ - b); }
  u128 Neg(u128 a) const { return a == 0 ? 0 : q_ - a; }
  u128 Reduce(u128 a) const { return a < q_ ? a : a % q_; }

  // a * b * 2^-128 mod q. Requires a, b < q.
  u128 MontMul(u128 a, u128 b) const {
    const Wide256 t = MulWide(a, b);
    const u128 m = t.lo * qinv_neg_;
    const Wide256 mq = MulWide(m, q_);
    // t.lo + mq.lo == 0 mod 2^128; the carry is set unless both are zero.
    const u128 carry = t.lo != 0 ? 1 : 0;
    u128 r = t.hi + mq.hi + carry;
    return r >= q_ ? r - q_ : r;
  }

  u128 ToMont(u128 a) const { return MontMul(a, r2_); }
  u128 FromMont(u128 a) const { return MontMul(a, 1); }

  u128 Mul(u128 a, u128 b) const { return MontMul(a, ToMont(b)); }

  u128 Pow(u128 base, u128 exp) const;
  // Requires q prime and a != 0.
  u128 Inverse(u128 a) const;

  u128 FromSigned(i128 x) const;
  // Signed representative in (-q/2, q/2].
  i128 Lift(u128 a) const {
    return a <= half_ ? static_cast<i128>(a) : static_cast<i128>(a) - static_cast<i128>(q_);
  }

  bool operator==(const Modulus& other) const { return q_ == other.q_; }

 private:
  u128 q_;
  u128 half_;      // floor(q / 2)
  u128 qinv_neg_;  // -q^-1 mod 2^128
  u128 r2_;        // 2^256 mod q
};

}  // namespace hecache

#endif  // HECACHE_MODULUS_HPP_
