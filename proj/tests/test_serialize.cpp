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

#include <filesystem>

#include "hecache/errors.hpp"
#include "hecache/he/scheme.hpp"
#include "hecache/he/serialize.hpp"
#include "support.hpp"

namespace hecache::he {
namespace {

namespace fs = std::filesystem;
using ring::Params;
using ring::Ring;

const fs::path kDataDir = HECACHE_TEST_DATA_DIR;

std::string Hex(std::string_view bytes) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 15]);
  }
  return out;
}

TEST(Serialize, ParamsHeaderLayout) {
  const std::string blob = SerializeParams(Params::Desk());
  ASSERT_EQ(blob.size(), kHeaderSize);
  EXPECT_EQ(Hex(blob),
            "534d4331"
            "08000000000000000000000000000000"
            "01300000000000000000000000000000"
            "40000000000000000000000000000000"
            "00000000");
  const BlobHeader h = ParseHeader(blob);
  EXPECT_EQ(h.n, 8u);
  EXPECT_EQ(h.q, 12289u);
  EXPECT_EQ(h.scale, 64u);
  EXPECT_EQ(h.poly_count, 0u);
}

TEST(Serialize, GoldenDeskCiphertexts) {
  const auto r = Ring::Create(Params::Desk());
  ring::SeededStream rng(1);
  const KeyPair kp = Keygen(r, rng);
  testing::ZeroSource zero;
  struct Case {
    double value;
    const char* file;
  };
  for (const Case& c : {Case{1.5, "desk_ciphertext_1p5.bin"},
                        Case{-2.25, "desk_ciphertext_m2p25.bin"}}) {
    const Ciphertext ct = Encrypt(kp.pk, Plaintext{c.value, 64}, zero);
    const std::string golden = ReadFile(kDataDir / c.file);
    EXPECT_EQ(Hex(SerializeCiphertext(ct)), Hex(golden)) << c.file;
    const Ciphertext back = ParseCiphertext(golden, r);
    EXPECT_EQ(back, ct);
    EXPECT_EQ(Decrypt(kp.sk, back), c.value);
  }
}

TEST(Serialize, KeysAndCiphertextRoundTrip) {
  const auto r = Ring::Create(Params::Default());
  ring::SeededStream rng(2);
  const KeyPair kp = Keygen(r, rng);
  const PublicKey pk = ParsePublicKey(SerializePublicKey(kp.pk), r);
  EXPECT_EQ(pk.pk1(), kp.pk.pk1());
  EXPECT_EQ(pk.pk2(), kp.pk.pk2());
  const SecretKey sk = ParseSecretKey(SerializeSecretKey(kp.sk), r);
  EXPECT_EQ(sk.s(), kp.sk.s());
  const Ciphertext ct = Encrypt(kp.pk, Plaintext::AtDefaultScale(3.5, r), rng);
  const std::string blob = SerializeCiphertext(ct);
  EXPECT_EQ(blob.size(), kHeaderSize + 2 * 4096 * 16);
  EXPECT_EQ(ParseCiphertext(blob, r), ct);
  EXPECT_EQ(ParseHeader(SerializeCiphertext(WithScale(ct, 12345))).scale, 12345u);
}

TEST(Serialize, MalformedBlobsRejected) {
  const auto r = Ring::Create(Params::Desk());
  const std::string good = ReadFile(kDataDir / "desk_ciphertext_1p5.bin");
  EXPECT_THROW(ParseHeader(good.substr(0, 10)), FormatError);
  std::string bad_magic = good;
  bad_magic[0] = 'X';
  EXPECT_THROW(ParseCiphertext(bad_magic, r), FormatError);
  EXPECT_THROW(ParseCiphertext(good.substr(0, good.size() - 1), r), FormatError);
  EXPECT_THROW(ParseSecretKey(good, r), FormatError);
  std::string bad_coeff = good;
  bad_coeff[kHeaderSize + 15] = '\x7f';  // coefficient far above q
  EXPECT_THROW(ParseCiphertext(bad_coeff, r), FormatError);
  const auto other = Ring::Create(Params::Default());
  EXPECT_THROW(ParseCiphertext(good, other), FormatError);
}

TEST(Serialize, ParamsJsonRoundTrip) {
  Params p = Params::Default(99);
  p.radix = 3;
  const std::string json = ParamsToJson(p);
  EXPECT_NE(json.find("\"q\": \"42535295865117307932921825928970764289\""), std::string::npos);
  EXPECT_EQ(ParamsFromJson(json), p);
  EXPECT_THROW(ParamsFromJson("{\"n\": 8}"), FormatError);
  EXPECT_THROW(ParamsFromJson("not json"), FormatError);
}

TEST(Serialize, FileErrors) {
  EXPECT_THROW(ReadFile("/nonexistent/dir/file.bin"), IoError);
  EXPECT_THROW(WriteFile("/nonexistent/dir/file.bin", "x"), IoError);
}

}  // namespace
}  // namespace hecache::he
