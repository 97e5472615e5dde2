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

#include "hecache/cache/smuche.hpp"

#include <cmath>
#include <string>

#include "hecache/errors.hpp"
#include "hecache/ring/sampling.hpp"

namespace hecache::smuche {
namespace {

// Relative slack when comparing powers of 1/r held in floating point.
constexpr long double kRelEps = 1e-12L;

}  // namespace

SmuchePivotCache::SmuchePivotCache(std::vector<he::Ciphertext> pivots, std::uint32_t radix)
    : pivots_(std::move(pivots)), radix_(radix) {
  if (pivots_.empty()) throw ParameterError("Smuche cache needs at least the identity pivot");
  if (radix_ < 2) throw ParameterError("radix must be at least 2");
}

SmuchePivotCache Precompute(const he::PublicKey& pk, double delta_inv, ring::RandomSource& rng) {
  const ring::Params& params = pk.ring()->params();
  const std::uint32_t r = params.radix;
  if (!(delta_inv > 0.0) || delta_inv > 1.0) {
    throw ParameterError("precision must lie in (0, 1], got " + std::to_string(delta_inv));
  }
  const long double lowest = static_cast<long double>(delta_inv) * (1.0L - kRelEps);

  std::vector<he::Ciphertext> cache;
  u128 r_pow = 1;  // r^i
  long double pivot = 1.0L;
  for (std::size_t i = 0; pivot >= lowest; ++i, pivot /= r) {
    if (i > 0) r_pow *= r;
    if (r_pow > params.delta) {
      throw ParameterError("precision finer than 1/delta cannot be cached");
    }
    // enc(r^-i) at scale delta: constant coefficient round(delta / r^i).
    const u128 encoded = (params.delta + r_pow / 2) / r_pow;
    cache.push_back(he::EncryptEncoded(
        pk, he::EncodeInteger(static_cast<i128>(encoded), 1, pk.ring()), params.delta, rng));
  }
  // The walk stops at the first pivot below delta_inv; the last cached one
  // must equal it.
  const long double last = pivot * r;
  if (std::fabs(last - delta_inv) > kRelEps * delta_inv * 1e3L) {
    throw ParameterError("precision " + std::to_string(delta_inv) + " is not a power of 1/" +
                         std::to_string(r));
  }
  return SmuchePivotCache(std::move(cache), r);
}

std::size_t SelectPivot(double precision_inv, std::uint32_t radix, std::size_t max_idx) {
  if (!(precision_inv > 0.0)) {
    throw ParameterError("precision must be positive, got " + std::to_string(precision_inv));
  }
  const long double target = static_cast<long double>(precision_inv) * (1.0L + kRelEps);
  std::size_t idx = 0;
  long double pivot = 1.0L;
  while (pivot > target) {
    ++idx;
    pivot /= radix;
    if (idx > max_idx) {
      throw RangeError("precision " + std::to_string(precision_inv) +
                       " is finer than the cache supports (r^-" + std::to_string(max_idx) + ")");
    }
  }
  return idx;
}

u128 MaxScalar(const ring::Params& params) {
  const long double bound = 6.0L * params.sigma;
  const long double noise = static_cast<long double>(params.n) * bound * bound * 8.0L;
  const long double limit = static_cast<long double>(params.q) /
                            (4.0L * static_cast<long double>(params.delta) * noise);
  return limit < 1.0L ? 0 : static_cast<u128>(limit);
}

i128 ScalarFor(double m, std::uint32_t radix, std::size_t idx) {
  if (!std::isfinite(m)) throw RangeError("plaintext is not finite");
  long double scaled = m;
  for (std::size_t i = 0; i < idx; ++i) scaled *= radix;
  if (std::fabs(scaled) >= 0x1p126L) throw RangeError("scaled plaintext exceeds 126 bits");
  return static_cast<i128>(std::roundl(scaled));
}

he::Ciphertext Construct(const SmuchePivotCache& cache, double m, double precision_inv) {
  const std::size_t idx = SelectPivot(precision_inv, cache.radix(), cache.max_idx());
  const i128 z = ScalarFor(m, cache.radix(), idx);
  const u128 mag = z >= 0 ? static_cast<u128>(z) : static_cast<u128>(-z);
  const u128 limit = MaxScalar(cache.ring()->params());
  if (mag > limit) {
    throw RangeError("scalar " + ToString(z) + " exceeds the noise budget of one scalar "
                     "multiplication (|z| <= " + ToString(limit) + ")");
  }
  return he::ScalarMul(z, cache.pivot(idx));
}

he::Ciphertext Randomize(const he::PublicKey& pk, const he::Ciphertext& cprime,
                         ring::RandomSource& rng) {
  if (!cprime.c1().Compatible(pk.pk1())) {
    throw ParameterError("ciphertext and public key live in different rings");
  }
  const he::Poly xi = ring::SampleTernary(pk.ring(), rng);
  if (cprime.form() == he::Form::kEvaluation) {
    const he::Poly xi_eval = ring::ToEvaluation(xi);
    return he::Ciphertext(ring::Add(cprime.c1(), ring::MulEvaluated(pk.prepared1(), xi_eval)),
                          ring::Add(cprime.c2(), ring::MulEvaluated(pk.prepared2(), xi_eval)),
                          cprime.scale(), cprime.form());
  }
  return he::Ciphertext(ring::Add(cprime.c1(), ring::Mul(pk.prepared1(), xi)),
                        ring::Add(cprime.c2(), ring::Mul(pk.prepared2(), xi)), cprime.scale(),
                        cprime.form());
}

he::Ciphertext Encrypt(const SmuchePivotCache& cache, const he::PublicKey& pk, double m,
                       double precision_inv, ring::RandomSource& rng) {
  return Randomize(pk, Construct(cache, m, precision_inv), rng);
}

}  // namespace hecache::smuche
