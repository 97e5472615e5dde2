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

#include "hecache/modulus.hpp"

#include <algorithm>
#include <cctype>

#include "hecache/errors.hpp"

namespace hecache {

Modulus::Modulus(u128 q) : q_(q), half_(q / 2) {
  if (q < 3 || (q & 1) == 0 || BitLength(q) > kMaxBits) {
    throw ParameterError("modulus must be odd, at least 3 and below 2^126, got " +
                         ToString(q));
  }
  // Newton iteration for q^-1 mod 2^128; q*q == 1 mod 8 seeds 3 correct bits.
  u128 inv = q;
  for (int i = 0; i < 6; ++i) inv *= 2 - q * inv;
  qinv_neg_ = -inv;

  u128 r = (-q) % q;  // 2^128 mod q
  for (int i = 0; i < 128; ++i) r = Add(r, r);
  r2_ = r;
}

u128 Modulus::Pow(u128 base, u128 exp) const {
  u128 result = ToMont(1);
  u128 b = ToMont(Reduce(base));
  while (exp != 0) {
    if (exp & 1) result = MontMul(result, b);
    b = MontMul(b, b);
    exp >>= 1;
  }
  return FromMont(result);
}

u128 Modulus::Inverse(u128 a) const {
  if (Reduce(a) == 0) throw ParameterError("zero has no inverse");
  return Pow(a, q_ - 2);
}

u128 Modulus::FromSigned(i128 x) const {
  if (x >= 0) return Reduce(static_cast<u128>(x));
  // -x can overflow only for the minimum value, which is far below -q.
  const u128 mag = Reduce(static_cast<u128>(-(x + 1)) + 1);
  return Neg(mag);
}

std::string ToString(u128 x) {
  if (x == 0) return "0";
  std::string out;
  while (x != 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(x % 10)));
    x /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::string ToString(i128 x) {
  if (x >= 0) return ToString(static_cast<u128>(x));
  return "-" + ToString(static_cast<u128>(-(x + 1)) + 1);
}

u128 ParseU128(std::string_view text) {
  unsigned base = 10;
  if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
    base = 16;
    text.remove_prefix(2);
  }
  if (text.empty()) throw ParameterError("empty integer literal");
  const u128 max = ~static_cast<u128>(0);
  u128 value = 0;
  for (char c : text) {
    unsigned digit;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digit = static_cast<unsigned>(c - '0');
    } else if (base == 16 && std::isxdigit(static_cast<unsigned char>(c))) {
      digit = static_cast<unsigned>(std::tolower(static_cast<unsigned char>(c)) - 'a' + 10);
    } else {
      throw ParameterError("malformed integer literal: " + std::string(text));
    }
    if (value > (max - digit) / base) {
      throw ParameterError("integer literal exceeds 128 bits: " + std::string(text));
    }
    value = value * base + digit;
  }
  return value;
}

}  // namespace hecache
