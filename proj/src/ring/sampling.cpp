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

#include "hecache/ring/sampling.hpp"

#include <array>
#include <cmath>
#include <vector>

namespace hecache::ring {

Poly SampleUniform(const RingPtr& ring, RandomSource& rng) {
  const Modulus& mod = ring->modulus();
  const u128 q = mod.value();
  const int bits = mod.bits();
  const u128 mask = bits >= 128 ? ~static_cast<u128>(0) : Pow2(bits) - 1;

  PolyBuilder out(ring);
  auto dst = out.data();
  std::array<std::uint64_t, 2> w;
  for (auto& c : dst) {
    do {
      rng.FillWords(w);
      c = ((static_cast<u128>(w[1]) << 64) | w[0]) & mask;
    } while (c >= q);
  }
  return std::move(out).Build();
}

Poly SampleTernary(const RingPtr& ring, RandomSource& rng) {
  const u128 q = ring->modulus().value();
  std::vector<std::int8_t> t(ring->degree());
  rng.FillTernary(t);
  PolyBuilder out(ring);
  auto dst = out.data();
  for (std::size_t i = 0; i < dst.size(); ++i) {
    dst[i] = t[i] == 0 ? 0 : (t[i] > 0 ? 1 : q - 1);
  }
  return std::move(out).Build();
}

Poly SampleGaussian(const RingPtr& ring, RandomSource& rng) {
  const double sigma = ring->params().sigma;
  const Modulus& mod = ring->modulus();
  constexpr double kTailCut = 6.0;

  std::vector<double> draws(ring->degree());
  rng.FillNormal(draws);
  PolyBuilder out(ring);
  auto dst = out.data();
  double redraw = 0.0;
  for (std::size_t i = 0; i < dst.size(); ++i) {
    double x = draws[i];
    while (std::fabs(x) > kTailCut) {
      rng.FillNormal(std::span<double>(&redraw, 1));
      x = redraw;
    }
    dst[i] = mod.FromSigned(static_cast<i128>(std::llround(x * sigma)));
  }
  return std::move(out).Build();
}

}  // namespace hecache::ring
