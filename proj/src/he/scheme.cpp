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

#include "hecache/he/scheme.hpp"

#include <cmath>
#include <string>

#include "hecache/errors.hpp"
#include "hecache/ring/sampling.hpp"

namespace hecache::he {
namespace {

void RequireMatching(const Ciphertext& a, const Ciphertext& b, const char* op) {
  if (!a.c1().Compatible(b.c1())) {
    throw ParameterError(std::string(op) + ": ciphertexts live in different rings");
  }
  if (a.scale() != b.scale()) {
    throw ParameterError(std::string(op) + ": scale mismatch (" + ToString(a.scale()) +
                         " vs " + ToString(b.scale()) + ")");
  }
  if (a.form() != b.form()) {
    throw ParameterError(std::string(op) + ": ciphertexts are in different domains");
  }
}

}  // namespace

SecretKey::SecretKey(Poly s) : s_(s), prepared_(s_) {}

PublicKey::PublicKey(Poly pk1, Poly pk2) : p1_(pk1), p2_(pk2) {
  if (!pk1.Compatible(pk2)) throw ParameterError("public key halves live in different rings");
}

KeyPair Keygen(const RingPtr& ring, RandomSource& rng, KeygenTrace* trace) {
  Poly s = ring::SampleTernary(ring, rng);
  Poly a = ring::SampleUniform(ring, rng);
  Poly e = ring::SampleGaussian(ring, rng);
  Poly pk1 = ring::Add(ring::Negate(ring::Mul(a, s)), e);
  if (trace != nullptr) *trace = KeygenTrace{a, e};
  return KeyPair{PublicKey(std::move(pk1), std::move(a)), SecretKey(std::move(s))};
}

Form NativeForm(const RingPtr& ring) {
  return ring->ntt() != nullptr ? Form::kEvaluation : Form::kCoefficient;
}

Ciphertext::Ciphertext(Poly c1, Poly c2, u128 scale, Form form)
    : c1_(std::move(c1)), c2_(std::move(c2)), scale_(scale), form_(form) {
  if (!c1_.Compatible(c2_)) throw ParameterError("ciphertext halves live in different rings");
  if (scale_ == 0) throw ParameterError("ciphertext scale must be positive");
}

Poly Encode(double m, u128 scale, const RingPtr& ring) {
  if (scale == 0) throw ParameterError("encoding scale must be positive");
  const long double scaled = static_cast<long double>(m) * static_cast<long double>(scale);
  const long double limit = static_cast<long double>(ring->modulus().value()) / 4.0L;
  if (!(std::fabs(scaled) < limit)) {
    throw OverflowError("|m * scale| = " + std::to_string(static_cast<double>(std::fabs(scaled))) +
                        " does not fit below q/4");
  }
  const i128 value = static_cast<i128>(std::roundl(scaled));
  return Poly::Constant(ring, ring->modulus().FromSigned(value));
}

Poly EncodeInteger(i128 z, u128 scale, const RingPtr& ring) {
  if (scale == 0) throw ParameterError("encoding scale must be positive");
  const u128 mag = z >= 0 ? static_cast<u128>(z) : static_cast<u128>(-(z + 1)) + 1;
  const Wide256 prod = MulWide(mag, scale);
  const u128 limit = ring->modulus().value() / 4;
  if (prod.hi != 0 || prod.lo >= limit) {
    throw OverflowError("|z * scale| does not fit below q/4 (z = " + ToString(z) + ")");
  }
  const u128 r = ring->modulus().Reduce(prod.lo);
  return Poly::Constant(ring, z >= 0 ? r : ring->modulus().Neg(r));
}

double Decode(const Poly& p, u128 scale) {
  if (scale == 0) throw ParameterError("decoding scale must be positive");
  const i128 lifted = p.modulus().Lift(p[0]);
  return static_cast<double>(static_cast<long double>(lifted) / static_cast<long double>(scale));
}

Ciphertext Encrypt(const PublicKey& pk, const Plaintext& pt, RandomSource& rng) {
  return EncryptEncoded(pk, Encode(pt.value, pt.scale, pk.ring()), pt.scale, rng);
}

Ciphertext EncryptEncoded(const PublicKey& pk, const Poly& m, u128 scale, RandomSource& rng) {
  const RingPtr& ring = pk.ring();
  if (!m.Compatible(pk.pk1())) throw ParameterError("plaintext and key live in different rings");
  Poly u = ring::SampleTernary(ring, rng);
  Poly e1 = ring::SampleGaussian(ring, rng);
  Poly e2 = ring::SampleGaussian(ring, rng);

  if (NativeForm(ring) == Form::kEvaluation) {
    const Poly u_eval = ring::ToEvaluation(u);
    const Poly m_eval = ring::ConstantEvaluation(ring, m[0]);
    Poly c1 = ring::Add(ring::Add(ring::MulEvaluated(pk.prepared1(), u_eval),
                                  ring::ToEvaluation(e1)),
                        m_eval);
    Poly c2 = ring::Add(ring::MulEvaluated(pk.prepared2(), u_eval), ring::ToEvaluation(e2));
    return Ciphertext(std::move(c1), std::move(c2), scale, Form::kEvaluation);
  }
  Poly c1 = ring::Add(ring::Add(ring::Mul(pk.prepared1(), u), e1), m);
  Poly c2 = ring::Add(ring::Mul(pk.prepared2(), u), e2);
  return Ciphertext(std::move(c1), std::move(c2), scale, Form::kCoefficient);
}

Poly DecryptToPoly(const SecretKey& sk, const Ciphertext& ct) {
  if (ct.form() == Form::kEvaluation) {
    return ring::ToCoefficients(
        ring::Add(ct.c1(), ring::MulEvaluated(sk.prepared(), ct.c2())));
  }
  return ring::Add(ct.c1(), ring::Mul(sk.prepared(), ct.c2()));
}

double Decrypt(const SecretKey& sk, const Ciphertext& ct) {
  return Decode(DecryptToPoly(sk, ct), ct.scale());
}

Ciphertext ZeroCiphertext(const RingPtr& ring, u128 scale) {
  return ZeroCiphertext(ring, scale, NativeForm(ring));
}

Ciphertext ZeroCiphertext(const RingPtr& ring, u128 scale, Form form) {
  return Ciphertext(Poly::Zero(ring), Poly::Zero(ring), scale, form);
}

Ciphertext Add(const Ciphertext& a, const Ciphertext& b) {
  RequireMatching(a, b, "Add");
  return Ciphertext(ring::Add(a.c1(), b.c1()), ring::Add(a.c2(), b.c2()), a.scale(), a.form());
}

Ciphertext Sub(const Ciphertext& a, const Ciphertext& b) {
  RequireMatching(a, b, "Sub");
  return Ciphertext(ring::Sub(a.c1(), b.c1()), ring::Sub(a.c2(), b.c2()), a.scale(), a.form());
}

Ciphertext ScalarMul(i128 z, const Ciphertext& ct) {
  return Ciphertext(ring::ScalarMul(z, ct.c1()), ring::ScalarMul(z, ct.c2()), ct.scale(),
                    ct.form());
}

Ciphertext ToCoefficientForm(const Ciphertext& ct) {
  if (ct.form() == Form::kCoefficient) return ct;
  return Ciphertext(ring::ToCoefficients(ct.c1()), ring::ToCoefficients(ct.c2()), ct.scale(),
                    Form::kCoefficient);
}

Ciphertext ToEvaluationForm(const Ciphertext& ct) {
  if (ct.form() == Form::kEvaluation) return ct;
  return Ciphertext(ring::ToEvaluation(ct.c1()), ring::ToEvaluation(ct.c2()), ct.scale(),
                    Form::kEvaluation);
}

Ciphertext WithScale(const Ciphertext& ct, u128 scale) {
  return Ciphertext(ct.c1(), ct.c2(), scale, ct.form());
}

double NoiseTolerance(const ring::Params& params) {
  const double bound = 6.0 * params.sigma;
  return static_cast<double>(params.n) * bound * bound * 8.0 / static_cast<double>(params.delta);
}

}  // namespace hecache::he
