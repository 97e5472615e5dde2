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

#ifndef HECACHE_RING_POLY_HPP_
#define HECACHE_RING_POLY_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "hecache/modulus.hpp"
#include "hecache/ring/ntt.hpp"
#include "hecache/ring/params.hpp"

namespace hecache::ring {

// Immutable context for Z_q[X]/(X^N + 1): parameters, modulus arithmetic and,
// when q allows it, NTT tables. Shared by every Poly built over it.
class Ring {
 public:
  static std::shared_ptr<const Ring> Create(const Params& params);

  const Params& params() const { return params_; }
  const Modulus& modulus() const { return mod_; }
  std::size_t degree() const { return params_.n; }
  const NttTables* ntt() const { return ntt_ ? &*ntt_ : nullptr; }

 private:
  explicit Ring(const Params& params);

  Params params_;
  Modulus mod_;
  std::optional<NttTables> ntt_;
};

using RingPtr = std::shared_ptr<const Ring>;

// Element of Z_q[X]/(X^N + 1), coefficients canonical in [0, q).
class Poly {
 public:
  static Poly Zero(RingPtr ring);
  static Poly Constant(RingPtr ring, u128 c);
  // Throws ParameterError on wrong length or out-of-range coefficients.
  static Poly FromCoeffs(RingPtr ring, std::vector<u128> coeffs);
  static Poly FromSigned(RingPtr ring, std::span<const i128> coeffs);

  const RingPtr& ring() const { return ring_; }
  const Modulus& modulus() const { return ring_->modulus(); }
  std::size_t size() const { return coeffs_.size(); }
  u128 operator[](std::size_t i) const { return coeffs_[i]; }
  std::span<const u128> coeffs() const { return coeffs_; }
  bool IsZero() const;

  // Same N and q; the ring objects themselves may differ.
  bool Compatible(const Poly& other) const;

  bool operator==(const Poly& other) const {
    return Compatible(other) && coeffs_ == other.coeffs_;
  }

 private:
  friend class PolyBuilder;
  Poly(RingPtr ring, std::vector<u128> coeffs)
      : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {}

  RingPtr ring_;
  std::vector<u128> coeffs_;
};

// Mutable scratch that hands out a Poly when done. Kernels write through
// data() and must leave every coefficient canonical.
class PolyBuilder {
 public:
  explicit PolyBuilder(RingPtr ring);
  std::span<u128> data() { return coeffs_; }
  Poly Build() &&;

 private:
  RingPtr ring_;
  std::vector<u128> coeffs_;
};

// A fixed multiplicand kept in the NTT domain (Montgomery form) so repeated
// products against it cost one forward and one inverse transform.
class PreparedPoly {
 public:
  explicit PreparedPoly(const Poly& p);

  const Poly& poly() const { return poly_; }
  bool has_transform() const { return !eval_.empty(); }
  std::span<const u128> eval() const { return eval_; }

 private:
  Poly poly_;
  std::vector<u128> eval_;
};

// Ring-operation tallies. Every public kernel below bumps exactly one counter
// per call, giving machine-independent cost figures.
struct OpCounts {
  std::uint64_t poly_add = 0;         // add, sub and negate
  std::uint64_t poly_mul = 0;         // ring products
  std::uint64_t poly_scalar_mul = 0;  // integer-times-poly
  std::uint64_t transforms = 0;       // forward/inverse NTTs outside Mul

  // Ring operations proper; transforms are tracked but not included.
  std::uint64_t total() const { return poly_add + poly_mul + poly_scalar_mul; }
  OpCounts operator-(const OpCounts& o) const {
    return {poly_add - o.poly_add, poly_mul - o.poly_mul, poly_scalar_mul - o.poly_scalar_mul,
            transforms - o.transforms};
  }
  bool operator==(const OpCounts&) const = default;
};

// Per-thread counters.
OpCounts& ThreadOpCounts();

// Records the ops issued on this thread between construction and Delta().
class OpCountScope {
 public:
  OpCountScope() : start_(ThreadOpCounts()) {}
  OpCounts Delta() const { return ThreadOpCounts() - start_; }

 private:
  OpCounts start_;
};

// Ring operations. Mismatched N or q throws ParameterError.
Poly Add(const Poly& a, const Poly& b);
Poly Sub(const Poly& a, const Poly& b);
Poly Negate(const Poly& a);
// Negacyclic product; uses the NTT when the ring has tables.
Poly Mul(const Poly& a, const Poly& b);
Poly Mul(const PreparedPoly& a, const Poly& b);
// z is reduced mod q first, so any signed 128-bit value is accepted.
Poly ScalarMul(i128 z, const Poly& a);

// Evaluation (NTT) domain. Add, Sub, Negate and ScalarMul act identically in
// both domains; these convert between them and multiply pointwise. All throw
// ParameterError when the ring has no NTT.
Poly ToEvaluation(const Poly& coeffs);
Poly ToCoefficients(const Poly& evals);
// Evaluation form of the constant polynomial c: every slot equals c.
Poly ConstantEvaluation(const RingPtr& ring, u128 c);
// Pointwise product of evaluation-form operands, counted as poly_mul.
Poly MulEvaluated(const PreparedPoly& a, const Poly& b_evals);

// Reference kernels, exposed for tests and benchmarks. Counted as poly_mul.
Poly MulSchoolbook(const Poly& a, const Poly& b);
Poly MulNtt(const Poly& a, const Poly& b);

}  // namespace hecache::ring

#endif  // HECACHE_RING_POLY_HPP_
