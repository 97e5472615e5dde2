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

// Binary layout shared by parameters, keys and ciphertexts:
//
//   offset  size      field
//   0       4         magic "SMC1"
//   4       16        N, little-endian
//   20      16        q, little-endian
//   36      16        scale (delta for params and keys, the ciphertext's
//                     own scale for ciphertexts), little-endian
//   52      4         number of polynomials P, little-endian uint32
//   56      P*N*16    coefficients, coefficient form, each 16-byte LE
//
// Params carry P = 0, public keys P = 2 (pk1, pk2), secret keys P = 1,
// ciphertexts P = 2 (c1, c2). Sigma, radix and seed are not part of the
// binary layout; the CLI stores them alongside in params.json.

#ifndef HECACHE_HE_SERIALIZE_HPP_
#define HECACHE_HE_SERIALIZE_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "hecache/he/scheme.hpp"
#include "hecache/ring/params.hpp"

namespace hecache::he {

inline constexpr std::string_view kMagic = "SMC1";
inline constexpr std::size_t kHeaderSize = 56;

std::string SerializeParams(const ring::Params& params);
std::string SerializePublicKey(const PublicKey& pk);
std::string SerializeSecretKey(const SecretKey& sk);
std::string SerializeCiphertext(const Ciphertext& ct);

// Header-only view of a blob: N, q, scale and polynomial count.
struct BlobHeader {
  std::size_t n = 0;
  u128 q = 0;
  u128 scale = 0;
  std::uint32_t poly_count = 0;
};
BlobHeader ParseHeader(std::string_view bytes);

// Each parser checks the magic, that N and q match `ring`, the polynomial
// count and the total length. Violations throw FormatError.
PublicKey ParsePublicKey(std::string_view bytes, const RingPtr& ring);
SecretKey ParseSecretKey(std::string_view bytes, const RingPtr& ring);
// The result is in the ring's native form.
Ciphertext ParseCiphertext(std::string_view bytes, const RingPtr& ring);

// Full parameter set as JSON (q and delta as decimal strings).
std::string ParamsToJson(const ring::Params& params);
ring::Params ParamsFromJson(std::string_view json);

std::string ReadFile(const std::filesystem::path& path);
void WriteFile(const std::filesystem::path& path, std::string_view bytes);

}  // namespace hecache::he

#endif  // HECACHE_HE_SERIALIZE_HPP_
