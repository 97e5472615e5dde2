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

#include "hecache/ring/params.hpp"

#include <string>

#include "hecache/errors.hpp"
#include "hecache/modulus.hpp"

namespace hecache::ring {

void Params::Validate() const {
  if (n < 8 || (n & (n - 1)) != 0) {
    throw ParameterError("ring degree must be a power of two >= 8, got " + std::to_string(n));
  }
  if (q < 3 || (q & 1) == 0 || BitLength(q) > Modulus::kMaxBits) {
    throw ParameterError("modulus must be odd and below 2^126, got " + ToString(q));
  }
  if (delta == 0) throw ParameterError("scale must be positive");
  // q > 2 * delta^2, evaluated without overflow.
  const Wide256 d2 = MulWide(delta, delta);
  const bool fits = d2.hi == 0 && (d2.lo >> 127) == 0 && 2 * d2.lo < q;
  if (!fits) {
    throw ParameterError("modulus must exceed 2 * scale^2 (q = " + ToString(q) +
                         ", scale = " + ToString(delta) + ")");
  }
  if (!(sigma > 0.0)) throw ParameterError("sigma must be positive");
  if (radix < 2) throw ParameterError("radix must be at least 2");
}

Params Params::Default(std::uint64_t seed) {
  Params p;
  p.n = 4096;
  p.q = Pow2(125) - Pow2(18) + 1;
  p.delta = Pow2(50);
  p.sigma = 3.2;
  p.radix = 2;
  p.seed = seed;
  return p;
}

Params Params::Desk(std::uint64_t seed) {
  Params p;
  p.n = 8;
  p.q = 12289;
  p.delta = 64;
  p.sigma = 3.2;
  p.radix = 2;
  p.seed = seed;
  return p;
}

Params Params::FromProfile(const std::string& name, std::uint64_t seed) {
  if (name == "default") return Default(seed);
  if (name == "desk") return Desk(seed);
  throw ParameterError("unknown profile '" + name + "' (expected default or desk)");
}

}  // namespace hecache::ring
