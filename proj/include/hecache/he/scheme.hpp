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

// RLWE public-key scheme over Z_q[X]/(X^N + 1) with a scalar encoding:
//
//   sk = s                 s ternary
//   pk = (-a*s + e, a)     a uniform, e Gaussian
//   enc(m) = (pk1*u + e1 + m, pk2*u + e2)
//   dec(c) = c1 + c2*s = m + e*u + e1 + s*e2
//
// A real value x is encoded as round(x * scale) in the constant coefficient.
// Ciphertexts are kept in the NTT evaluation domain whenever the ring has an
// NTT; addition and scalar multiplication are domain-agnostic, so only
// encryption and decryption touch transforms.

#ifndef HECACHE_HE_SCHEME_HPP_
#define HECACHE_HE_SCHEME_HPP_

#include <optional>

#include "hecache/ring/poly.hpp"
#include "hecache/ring/random.hpp"

namespace hecache::he {

using ring::Poly;
using ring::PreparedPoly;
using ring::RandomSource;
using ring::RingPtr;

class SecretKey {
 public:
  explicit SecretKey(Poly s);

  const Poly& s() const { return s_; }
  const PreparedPoly& prepared() const { return prepared_; }
  const RingPtr& ring() const { return s_.ring(); }

 private:
  Poly s_;
  PreparedPoly prepared_;
};

class PublicKey {
 public:
  PublicKey(Poly pk1, Poly pk2);

  const Poly& pk1() const { return p1_.poly(); }
  const Poly& pk2() const { return p2_.poly(); }
  const PreparedPoly& prepared1() const { return p1_; }
  const PreparedPoly& prepared2() const { return p2_; }
  const RingPtr& ring() const { return pk1().ring(); }

 private:
  PreparedPoly p1_;
  PreparedPoly p2_;
};

struct KeyPair {
  PublicKey pk;
  SecretKey sk;
};

// Internals of a key generation, for tests that check pk1 + pk2*s == e.
struct KeygenTrace {
  Poly a;
  Poly e;
};

// Samples s, a, e in that order from `rng`.
KeyPair Keygen(const RingPtr& ring, RandomSource& rng, KeygenTrace* trace = nullptr);

struct Plaintext {
  double value = 0.0;
  u128 scale = 1;

  // Plaintext at the ring's default scale delta.
  static Plaintext AtDefaultScale(double value, const RingPtr& ring) {
    return {value, ring->params().delta};
  }
};

enum class Form { kCoefficient, kEvaluation };

// The form fresh ciphertexts take in `ring`.
Form NativeForm(const RingPtr& ring);

class Ciphertext {
 public:
  Ciphertext(Poly c1, Poly c2, u128 scale, Form form);

  const Poly& c1() const { return c1_; }
  const Poly& c2() const { return c2_; }
  u128 scale() const { return scale_; }
  Form form() const { return form_; }
  const RingPtr& ring() const { return c1_.ring(); }

  // Same polynomials in the same domain at the same scale.
  bool operator==(const Ciphertext& other) const = default;

 private:
  Poly c1_;
  Poly c2_;
  u128 scale_;
  Form form_;
};

// Constant polynomial round(m * scale) mod q. Throws OverflowError unless
// |m * scale| < q/4.
Poly Encode(double m, u128 scale, const RingPtr& ring);
// Exact integer variant: z * scale, same overflow rule.
Poly EncodeInteger(i128 z, u128 scale, const RingPtr& ring);
// Signed lift of the constant coefficient, divided by scale.
double Decode(const Poly& p, u128 scale);

// Samples u, e1, e2 in that order from `rng`.
Ciphertext Encrypt(const PublicKey& pk, const Plaintext& pt, RandomSource& rng);
// Encrypts an already-encoded constant polynomial at `scale`.
Ciphertext EncryptEncoded(const PublicKey& pk, const Poly& encoded, u128 scale,
                          RandomSource& rng);
double Decrypt(const SecretKey& sk, const Ciphertext& ct);
// c1 + c2*s in coefficient form: the encoded message plus noise.
Poly DecryptToPoly(const SecretKey& sk, const Ciphertext& ct);

// The noiseless encryption of zero, (0, 0).
Ciphertext ZeroCiphertext(const RingPtr& ring, u128 scale);
Ciphertext ZeroCiphertext(const RingPtr& ring, u128 scale, Form form);

// Component-wise. Mismatched scale, form or ring throws ParameterError.
Ciphertext Add(const Ciphertext& a, const Ciphertext& b);
Ciphertext Sub(const Ciphertext& a, const Ciphertext& b);
Ciphertext ScalarMul(i128 z, const Ciphertext& ct);

Ciphertext ToCoefficientForm(const Ciphertext& ct);
Ciphertext ToEvaluationForm(const Ciphertext& ct);

// Same polynomials with the scale label replaced.
Ciphertext WithScale(const Ciphertext& ct, u128 scale);

// Conservative bound on fresh decryption error after dividing by delta:
// N * (6 sigma)^2 * 8 / delta.
double NoiseTolerance(const ring::Params& params);

}  // namespace hecache::he

#endif  // HECACHE_HE_SCHEME_HPP_
