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

// Microbenchmarks: schoolbook reference against the NTT fast path, then the
// three encryptors at the default profile.

#include <benchmark/benchmark.h>

#include "hecache/cache/rache.hpp"
#include "hecache/cache/smuche.hpp"
#include "hecache/he/scheme.hpp"
#include "hecache/ring/poly.hpp"
#include "hecache/ring/sampling.hpp"

namespace {

using namespace hecache;

ring::RingPtr RingOfDegree(std::size_t n) {
  ring::Params p = ring::Params::Default();
  p.n = n;
  return ring::Ring::Create(p);
}

struct Operands {
  ring::Poly a, b;
};

Operands RandomOperands(std::size_t n) {
  const auto r = RingOfDegree(n);
  ring::SeededStream rng(n);
  return {ring::SampleUniform(r, rng), ring::SampleUniform(r, rng)};
}

void BM_MulSchoolbook(benchmark::State& state) {
  const Operands ops = RandomOperands(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ring::MulSchoolbook(ops.a, ops.b));
}
BENCHMARK(BM_MulSchoolbook)->RangeMultiplier(4)->Range(64, 4096)->Unit(benchmark::kMicrosecond);

void BM_MulNtt(benchmark::State& state) {
  const Operands ops = RandomOperands(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ring::MulNtt(ops.a, ops.b));
}
BENCHMARK(BM_MulNtt)->RangeMultiplier(4)->Range(64, 4096)->Unit(benchmark::kMicrosecond);

void BM_MulPrepared(benchmark::State& state) {
  const Operands ops = RandomOperands(static_cast<std::size_t>(state.range(0)));
  const ring::PreparedPoly prepared(ops.a);
  for (auto _ : state) benchmark::DoNotOptimize(ring::Mul(prepared, ops.b));
}
BENCHMARK(BM_MulPrepared)->RangeMultiplier(4)->Range(64, 4096)->Unit(benchmark::kMicrosecond);

struct Keys {
  ring::RingPtr ring = ring::Ring::Create(ring::Params::Default());
  ring::SeededStream rng{7};
  he::KeyPair kp = he::Keygen(ring, rng);
};

Keys& SharedKeys() {
  static Keys keys;
  return keys;
}

void BM_CkksEnc(benchmark::State& state) {
  Keys& k = SharedKeys();
  const he::Plaintext pt = he::Plaintext::AtDefaultScale(1234.5, k.ring);
  for (auto _ : state) benchmark::DoNotOptimize(he::Encrypt(k.kp.pk, pt, k.rng));
}
BENCHMARK(BM_CkksEnc)->Unit(benchmark::kMillisecond);

void BM_SmucheEnc(benchmark::State& state) {
  Keys& k = SharedKeys();
  const auto cache = smuche::Precompute(k.kp.pk, 0.5, k.rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(smuche::Encrypt(cache, k.kp.pk, 1234.5, 0.5, k.rng));
  }
}
BENCHMARK(BM_SmucheEnc)->Unit(benchmark::kMillisecond);

// Plaintext r^(nPivot - 1) - 1 sets every digit, the costliest case.
void BM_RacheEnc(benchmark::State& state) {
  Keys& k = SharedKeys();
  const auto n_pivot = static_cast<std::size_t>(state.range(0));
  const auto cache = rache::Precompute(k.kp.pk, n_pivot, k.rng);
  const u128 m = (u128{1} << (n_pivot - 1)) - 1;
  for (auto _ : state) benchmark::DoNotOptimize(rache::Encrypt(cache, m, k.rng));
}
BENCHMARK(BM_RacheEnc)->RangeMultiplier(2)->Range(4, 64)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
