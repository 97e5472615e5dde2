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

#include "hecache/ring/poly.hpp"

#include <algorithm>
#include <string>

#include "hecache/errors.hpp"

namespace hecache::ring {
namespace {

void RequireCompatible(const Poly& a, const Poly& b, const char* op) {
  if (!a.Compatible(b)) {
    throw ParameterError(std::string(op) + ": operands live in different rings");
  }
}

const NttTables& RequireNtt(const RingPtr& ring) {
  const NttTables* ntt = ring->ntt();
  if (ntt == nullptr) throw ParameterError("ring has no NTT (q != 1 mod 2N or q not prime)");
  return *ntt;
}

}  // namespace

// ---------------------------------------------------------------------------
// Ring

Ring::Ring(const Params& params)
    : params_(params),
      mod_(params.q),
      ntt_(NttTables::Create(mod_, params.n)) {}

std::shared_ptr<const Ring> Ring::Create(const Params& params) {
  params.Validate();
  return std::shared_ptr<const Ring>(new Ring(params));
}

// ---------------------------------------------------------------------------
// Poly

Poly Poly::Zero(RingPtr ring) {
  const std::size_t n = ring->degree();
  return Poly(std::move(ring), std::vector<u128>(n, 0));
}

Poly Poly::Constant(RingPtr ring, u128 c) {
  std::vector<u128> coeffs(ring->degree(), 0);
  coeffs[0] = ring->modulus().Reduce(c);
  return Poly(std::move(ring), std::move(coeffs));
}

Poly Poly::FromCoeffs(RingPtr ring, std::vector<u128> coeffs) {
  if (coeffs.size() != ring->degree()) {
    throw ParameterError("polynomial has " + std::to_string(coeffs.size()) +
                         " coefficients, ring degree is " + std::to_string(ring->degree()));
  }
  const u128 q = ring->modulus().value();
  for (u128 c : coeffs) {
    if (c >= q) throw ParameterError("coefficient " + ToString(c) + " not reduced mod q");
  }
  return Poly(std::move(ring), std::move(coeffs));
}

Poly Poly::FromSigned(RingPtr ring, std::span<const i128> coeffs) {
  if (coeffs.size() != ring->degree()) {
    throw ParameterError("polynomial length does not match ring degree");
  }
  std::vector<u128> out(coeffs.size());
  const Modulus& mod = ring->modulus();
  std::transform(coeffs.begin(), coeffs.end(), out.begin(),
                 [&](i128 c) { return mod.FromSigned(c); });
  return Poly(std::move(ring), std::move(out));
}

bool Poly::IsZero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](u128 c) { return c == 0; });
}

bool Poly::Compatible(const Poly& other) const {
  return ring_ == other.ring_ || ring_->params().SameRing(other.ring_->params());
}

PolyBuilder::PolyBuilder(RingPtr ring)
    : ring_(std::move(ring)), coeffs_(ring_->degree(), 0) {}

Poly PolyBuilder::Build() && { return Poly(std::move(ring_), std::move(coeffs_)); }

PreparedPoly::PreparedPoly(const Poly& p) : poly_(p) {
  const NttTables* ntt = p.ring()->ntt();
  if (ntt == nullptr) return;
  eval_.assign(p.coeffs().begin(), p.coeffs().end());
  ntt->Forward(eval_);
  const Modulus& mod = p.modulus();
  for (auto& x : eval_) x = mod.ToMont(x);
}

// ---------------------------------------------------------------------------
// Counters

OpCounts& ThreadOpCounts() {
  thread_local OpCounts counts;
  return counts;
}

// ---------------------------------------------------------------------------
// Kernels

Poly Add(const Poly& a, const Poly& b) {
  RequireCompatible(a, b, "Add");
  ++ThreadOpCounts().poly_add;
  const Modulus& mod = a.modulus();
  PolyBuilder out(a.ring());
  auto dst = out.data();
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = mod.Add(a[i], b[i]);
  return std::move(out).Build();
}

Poly Sub(const Poly& a, const Poly& b) {
  RequireCompatible(a, b, "Sub");
  ++ThreadOpCounts().poly_add;
  const Modulus& mod = a.modulus();
  PolyBuilder out(a.ring());
  auto dst = out.data();
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = mod.Sub(a[i], b[i]);
  return std::move(out).Build();
}

Poly Negate(const Poly& a) {
  ++ThreadOpCounts().poly_add;
  const Modulus& mod = a.modulus();
  PolyBuilder out(a.ring());
  auto dst = out.data();
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = mod.Neg(a[i]);
  return std::move(out).Build();
}

Poly ScalarMul(i128 z, const Poly& a) {
  ++ThreadOpCounts().poly_scalar_mul;
  const Modulus& mod = a.modulus();
  const u128 zr = mod.FromSigned(z);
  PolyBuilder out(a.ring());
  auto dst = out.data();
  if (zr == 0) return std::move(out).Build();
  if (zr == 1) {
    std::copy(a.coeffs().begin(), a.coeffs().end(), dst.begin());
    return std::move(out).Build();
  }
  const u128 zm = mod.ToMont(zr);
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = mod.MontMul(a[i], zm);
  return std::move(out).Build();
}

Poly MulSchoolbook(const Poly& a, const Poly& b) {
  RequireCompatible(a, b, "Mul");
  ++ThreadOpCounts().poly_mul;
  const Modulus& mod = a.modulus();
  const std::size_t n = a.size();
  std::vector<u128> bm(n);
  for (std::size_t j = 0; j < n; ++j) bm[j] = mod.ToMont(b[j]);

  PolyBuilder out(a.ring());
  auto dst = out.data();
  for (std::size_t i = 0; i < n; ++i) {
    const u128 ai = a[i];
    if (ai == 0) continue;
    // X^i * X^j = X^(i+j) below N, -X^(i+j-N) above.
    for (std::size_t j = 0; j < n - i; ++j) {
      dst[i + j] = mod.Add(dst[i + j], mod.MontMul(ai, bm[j]));
    }
    for (std::size_t j = n - i; j < n; ++j) {
      dst[i + j - n] = mod.Sub(dst[i + j - n], mod.MontMul(ai, bm[j]));
    }
  }
  return std::move(out).Build();
}

Poly MulNtt(const Poly& a, const Poly& b) {
  RequireCompatible(a, b, "Mul");
  const NttTables* ntt = &RequireNtt(a.ring());
  ++ThreadOpCounts().poly_mul;
  const Modulus& mod = a.modulus();
  std::vector<u128> fa(a.coeffs().begin(), a.coeffs().end());
  PolyBuilder out(a.ring());
  auto fb = out.data();
  std::copy(b.coeffs().begin(), b.coeffs().end(), fb.begin());
  ntt->Forward(fa);
  ntt->Forward(fb);
  for (std::size_t i = 0; i < fb.size(); ++i) fb[i] = mod.MontMul(fa[i], fb[i]);
  ntt->InverseFromMontProduct(fb);
  return std::move(out).Build();
}

Poly Mul(const Poly& a, const Poly& b) {
  if (a.ring()->ntt() != nullptr) return MulNtt(a, b);
  return MulSchoolbook(a, b);
}

Poly Mul(const PreparedPoly& a, const Poly& b) {
  if (!a.has_transform()) return MulSchoolbook(a.poly(), b);
  RequireCompatible(a.poly(), b, "Mul");
  ++ThreadOpCounts().poly_mul;
  const NttTables& ntt = *b.ring()->ntt();
  const Modulus& mod = b.modulus();
  PolyBuilder out(b.ring());
  auto fb = out.data();
  std::copy(b.coeffs().begin(), b.coeffs().end(), fb.begin());
  ntt.Forward(fb);
  const auto ea = a.eval();
  for (std::size_t i = 0; i < fb.size(); ++i) fb[i] = mod.MontMul(ea[i], fb[i]);
  ntt.Inverse(fb);
  return std::move(out).Build();
}

Poly ToEvaluation(const Poly& coeffs) {
  const NttTables& ntt = RequireNtt(coeffs.ring());
  ++ThreadOpCounts().transforms;
  PolyBuilder out(coeffs.ring());
  auto dst = out.data();
  std::copy(coeffs.coeffs().begin(), coeffs.coeffs().end(), dst.begin());
  ntt.Forward(dst);
  return std::move(out).Build();
}

Poly ToCoefficients(const Poly& evals) {
  const NttTables& ntt = RequireNtt(evals.ring());
  ++ThreadOpCounts().transforms;
  PolyBuilder out(evals.ring());
  auto dst = out.data();
  std::copy(evals.coeffs().begin(), evals.coeffs().end(), dst.begin());
  ntt.Inverse(dst);
  return std::move(out).Build();
}

Poly ConstantEvaluation(const RingPtr& ring, u128 c) {
  RequireNtt(ring);
  PolyBuilder out(ring);
  auto dst = out.data();
  std::fill(dst.begin(), dst.end(), ring->modulus().Reduce(c));
  return std::move(out).Build();
}

Poly MulEvaluated(const PreparedPoly& a, const Poly& b_evals) {
  if (!a.has_transform()) throw ParameterError("prepared operand has no NTT image");
  RequireCompatible(a.poly(), b_evals, "MulEvaluated");
  ++ThreadOpCounts().poly_mul;
  const Modulus& mod = b_evals.modulus();
  const auto ea = a.eval();
  PolyBuilder out(b_evals.ring());
  auto dst = out.data();
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = mod.MontMul(ea[i], b_evals[i]);
  return std::move(out).Build();
}

}  // namespace hecache::ring
