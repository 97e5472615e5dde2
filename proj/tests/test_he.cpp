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

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

#include "hecache/errors.hpp"
#include "hecache/he/scheme.hpp"
#include "hecache/ring/sampling.hpp"
#include "support.hpp"

namespace hecache::he {
namespace {

using ring::Params;
using ring::Ring;
using testing::NegacyclicOracle;
using testing::ZeroSource;

class SchemeTest : public ::testing::Test {
 protected:
  void SetUp() override {
    ring_ = Ring::Create(Params::Default());
    ring::SeededStream rng(2024);
    keys_.emplace(Keygen(ring_, rng));
    tol_ = NoiseTolerance(ring_->params());
  }

  Ciphertext Enc(double m, std::uint64_t seed) {
    ring::SeededStream rng(seed);
    return Encrypt(keys_->pk, Plaintext::AtDefaultScale(m, ring_), rng);
  }
  double Dec(const Ciphertext& ct) { return Decrypt(keys_->sk, ct); }

  RingPtr ring_;
  std::optional<KeyPair> keys_;
  double tol_ = 0.0;
};

TEST(Tolerance, DefaultProfileBelowOneThousandth) {
  const double tol = NoiseTolerance(Params::Default());
  EXPECT_LT(tol, 1e-3);
  EXPECT_DOUBLE_EQ(tol, 4096.0 * 19.2 * 19.2 * 8.0 / std::ldexp(1.0, 50));
}

TEST(Encode, ScaledConstantCoefficient) {
  const auto r = Ring::Create(Params::Default());
  const Poly p = Encode(1.02, 100, r);
  EXPECT_EQ(p[0], 102u);
  for (std::size_t i = 1; i < p.size(); ++i) EXPECT_EQ(p[i], 0u);
  EXPECT_TRUE(Encode(0.0, 12345, r).IsZero());
  EXPECT_DOUBLE_EQ(Decode(p, 100), 1.02);
  EXPECT_EQ(Decode(Poly::Zero(r), 7), 0.0);
}

TEST(Encode, SignedResidueAtSeventeen) {
  const auto r = Ring::Create(testing::TinyParams());
  const Poly p = Encode(-1.5, 2, r);
  EXPECT_EQ(p[0], 14u);
  EXPECT_DOUBLE_EQ(Decode(p, 2), -1.5);
}

TEST(Encode, OverflowAtQuarterModulus) {
  const auto r = Ring::Create(testing::TinyParams());
  EXPECT_NO_THROW(Encode(2.0, 2, r));   // 4 < 17/4
  EXPECT_THROW(Encode(2.5, 2, r), OverflowError);
  EXPECT_THROW(Encode(-2.5, 2, r), OverflowError);
  EXPECT_THROW(EncodeInteger(5, 1, r), OverflowError);
  EXPECT_EQ(EncodeInteger(-3, 1, r)[0], 14u);
  const auto big = Ring::Create(Params::Default());
  EXPECT_THROW(Encode(std::ldexp(1.0, 73), Pow2(50), big), OverflowError);
  EXPECT_NO_THROW(Encode(std::ldexp(1.0, 72), Pow2(50), big));
}

TEST_F(SchemeTest, KeygenResidualIsTheGaussianError) {
  ring::SeededStream rng(77);
  KeygenTrace trace{Poly::Zero(ring_), Poly::Zero(ring_)};
  const KeyPair kp = Keygen(ring_, rng, &trace);
  const Poly residual = ring::Add(kp.pk.pk1(), ring::Mul(kp.pk.pk2(), kp.sk.s()));
  EXPECT_EQ(residual, trace.e);
  const double bound = 6 * 3.2 * (4096 + 1);
  for (u128 c : residual.coeffs()) EXPECT_LE(std::fabs((double)ring_->modulus().Lift(c)), bound);
  for (u128 c : kp.sk.s().coeffs()) {
    EXPECT_TRUE(c == 0 || c == 1 || c == ring_->params().q - 1);
  }
  ring::SeededStream other(78);
  EXPECT_NE(Keygen(ring_, other).pk.pk2(), kp.pk.pk2());
}

TEST_F(SchemeTest, RoundTripSmallValues) {
  EXPECT_NEAR(Dec(Enc(0.0, 1)), 0.0, tol_);
  EXPECT_NEAR(Dec(Enc(3.14, 2)), 3.14, tol_);
  EXPECT_NEAR(Dec(Enc(7.0, 3)), 7.0, tol_);
  EXPECT_NEAR(Dec(Enc(-123456.75, 4)), -123456.75, tol_);
}

TEST_F(SchemeTest, RoundTripThousandRandomReals) {
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> dist(-1e6, 1e6);
  for (int i = 0; i < 1000; ++i) {
    const double m = std::round(dist(gen) * 64.0) / 64.0;
    ASSERT_NEAR(Dec(Enc(m, 100 + i)), m, tol_) << m;
  }
}

TEST_F(SchemeTest, EncryptionIsRandomized) {
  EXPECT_NE(Enc(0.0, 1), Enc(0.0, 2));
  std::set<std::vector<u128>> seen;
  for (int i = 0; i < 100; ++i) {
    const Ciphertext ct = Enc(1.0, 500 + i);
    seen.insert(testing::Coeffs(ct.c1()));
  }
  EXPECT_EQ(seen.size(), 100u);
}

TEST_F(SchemeTest, ZeroRandomnessLeavesOnlyTheMessage) {
  ZeroSource zero;
  const Ciphertext ct =
      ToCoefficientForm(Encrypt(keys_->pk, Plaintext::AtDefaultScale(1.5, ring_), zero));
  EXPECT_EQ(ct.c1(), Encode(1.5, ring_->params().delta, ring_));
  EXPECT_TRUE(ct.c2().IsZero());
  EXPECT_EQ(Dec(ct), 1.5);
}

TEST_F(SchemeTest, NoiselessCiphertextDecryptsExactly) {
  const u128 delta = ring_->params().delta;
  const Ciphertext ct(Encode(42.25, delta, ring_), Poly::Zero(ring_), delta, Form::kCoefficient);
  EXPECT_EQ(Dec(ct), 42.25);
  EXPECT_EQ(Dec(ToEvaluationForm(ct)), 42.25);
}

TEST_F(SchemeTest, AdditiveHomomorphism) {
  EXPECT_NEAR(Dec(Add(Enc(2, 1), Enc(3, 2))), 5.0, 2 * tol_);
  EXPECT_NEAR(Dec(Add(Enc(1.5, 3), Enc(2.5, 4))), 4.0, 2 * tol_);
  EXPECT_NEAR(Dec(Sub(Enc(5, 5), Enc(5, 6))), 0.0, 2 * tol_);
  const Ciphertext a = Enc(9.0, 7);
  EXPECT_EQ(Add(a, ZeroCiphertext(ring_, a.scale())), a);
  std::mt19937_64 gen(8);
  std::uniform_real_distribution<double> dist(-1e5, 1e5);
  for (int i = 0; i < 50; ++i) {
    const double x = dist(gen), y = dist(gen);
    EXPECT_NEAR(Dec(Add(Enc(x, 1000 + i), Enc(y, 2000 + i))), x + y, 2 * tol_);
  }
}

TEST_F(SchemeTest, ScaleMismatchRejected) {
  const Ciphertext a = Enc(1.0, 1);
  EXPECT_THROW(Add(a, WithScale(a, 3)), ParameterError);
  EXPECT_THROW(Sub(a, ToCoefficientForm(a)), ParameterError);
}

TEST_F(SchemeTest, ScalarHomomorphism) {
  const Ciphertext ct = Enc(2.0, 9);
  EXPECT_EQ(ScalarMul(1, ct), ct);
  EXPECT_NEAR(Dec(ScalarMul(3, ct)), 6.0, 3 * tol_);
  Ciphertext acc = ZeroCiphertext(ring_, ct.scale());
  for (int z = 1; z <= 16; ++z) {
    acc = Add(acc, ct);
    EXPECT_EQ(ScalarMul(z, ct), acc);
  }
  std::mt19937_64 gen(10);
  std::uniform_int_distribution<std::int64_t> zd(-(1 << 20), 1 << 20);
  std::uniform_real_distribution<double> md(-1000.0, 1000.0);
  for (int i = 0; i < 50; ++i) {
    const std::int64_t z = zd(gen);
    const double m = md(gen);
    const Ciphertext c = Enc(m, 3000 + i);
    const long double want = static_cast<long double>(z) * m;
    EXPECT_NEAR(Dec(ScalarMul(z, c)), static_cast<double>(want),
                (std::abs(z) + 1) * tol_ + std::fabs((double)want) * 1e-15);
  }
}

TEST(SchemeAlgebra, DecryptionEqualsMessagePlusSmallNoise) {
  // Replays the encryption stream to recover u, e1, e2 and checks
  // c1 + c2*s = m + e*u + e1 + s*e2 coefficient by coefficient.
  const Params p = testing::WideParams(64);
  const auto r = Ring::Create(p);
  ring::SeededStream key_rng(31);
  KeygenTrace trace{Poly::Zero(r), Poly::Zero(r)};
  const KeyPair kp = Keygen(r, key_rng, &trace);

  const std::uint64_t seed = 32;
  ring::SeededStream enc_rng(seed);
  const Ciphertext ct = Encrypt(kp.pk, Plaintext::AtDefaultScale(12.5, r), enc_rng);

  ring::SeededStream replay(seed);
  const Poly u = ring::SampleTernary(r, replay);
  const Poly e1 = ring::SampleGaussian(r, replay);
  const Poly e2 = ring::SampleGaussian(r, replay);
  const Modulus& mod = r->modulus();
  const auto eu = NegacyclicOracle(trace.e.coeffs(), u.coeffs(), p.q);
  const auto se2 = NegacyclicOracle(kp.sk.s().coeffs(), e2.coeffs(), p.q);
  const Poly m = Encode(12.5, p.delta, r);

  const Poly dec = DecryptToPoly(kp.sk, ct);
  const double bound = 6 * 3.2 * (2 * 64 + 1);
  for (std::size_t i = 0; i < p.n; ++i) {
    const u128 want = mod.Add(mod.Add(mod.Add(m[i], eu[i]), e1[i]), se2[i]);
    ASSERT_EQ(dec[i], want) << i;
    const u128 noise = mod.Sub(want, m[i]);
    EXPECT_LE(std::fabs(static_cast<double>(mod.Lift(noise))), bound);
  }
}

TEST(SchemeForms, CoefficientRingWithoutNtt) {
  Params p = Params::Desk();
  p.q = 1000003;
  const auto r = Ring::Create(p);
  EXPECT_EQ(NativeForm(r), Form::kCoefficient);
  ring::SeededStream rng(1);
  const KeyPair kp = Keygen(r, rng);
  ZeroSource zero;
  const Ciphertext ct = Encrypt(kp.pk, Plaintext{3.0, 64}, zero);
  EXPECT_EQ(ct.form(), Form::kCoefficient);
  EXPECT_EQ(Decrypt(kp.sk, ct), 3.0);
  EXPECT_THROW(ToEvaluationForm(ct), ParameterError);
}

TEST(SchemeForms, FormConversionPreservesDecryption) {
  const auto r = Ring::Create(Params::Default());
  ring::SeededStream rng(3);
  const KeyPair kp = Keygen(r, rng);
  const Ciphertext ct = Encrypt(kp.pk, Plaintext::AtDefaultScale(-8.5, r), rng);
  EXPECT_EQ(ct.form(), Form::kEvaluation);
  const Ciphertext coeff = ToCoefficientForm(ct);
  EXPECT_EQ(DecryptToPoly(kp.sk, coeff), DecryptToPoly(kp.sk, ct));
  EXPECT_EQ(ToEvaluationForm(coeff), ct);
}

}  // namespace
}  // namespace hecache::he
