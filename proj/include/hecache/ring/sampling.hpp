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

#ifndef HECACHE_RING_SAMPLING_HPP_
#define HECACHE_RING_SAMPLING_HPP_

#include "hecache/ring/poly.hpp"
#include "hecache/ring/random.hpp"

namespace hecache::ring {

// Coefficients uniform in [0, q), by rejection on bit_length(q)-bit draws.
Poly SampleUniform(const RingPtr& ring, RandomSource& rng);

// Coefficients uniform in {-1, 0, +1}, stored as {q-1, 0, 1}.
Poly SampleTernary(const RingPtr& ring, RandomSource& rng);

// Rounded Gaussian with the ring's sigma. Draws beyond 6 sigma are redrawn,
// so every coefficient represents an integer in [-ceil(6 sigma), ceil(6 sigma)].
Poly SampleGaussian(const RingPtr& ring, RandomSource& rng);

}  // namespace hecache::ring

#endif  // HECACHE_RING_SAMPLING_HPP_
