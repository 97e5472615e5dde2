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

#include "hecache/he/serialize.hpp"

#include <fstream>
#include <iterator>
#include <vector>

#include <json.hpp>

#include "hecache/errors.hpp"

namespace hecache::he {
namespace {

void PutU128(std::string& out, u128 v) {
  for (int i = 0; i < 16; ++i) {
    out.push_back(static_cast<char>(static_cast<unsigned char>(v & 0xff)));
    v >>= 8;
  }
}

void PutU32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) {
    out.push_back(static_cast<char>(static_cast<unsigned char>(v & 0xff)));
    v >>= 8;
  }
}

u128 GetU128(std::string_view bytes, std::size_t offset) {
  u128 v = 0;
  for (int i = 15; i >= 0; --i) {
    v = (v << 8) | static_cast<unsigned char>(bytes[offset + static_cast<std::size_t>(i)]);
  }
  return v;
}

std::uint32_t GetU32(std::string_view bytes, std::size_t offset) {
  std::uint32_t v = 0;
  for (int i = 3; i >= 0; --i) {
    v = (v << 8) | static_cast<unsigned char>(bytes[offset + static_cast<std::size_t>(i)]);
  }
  return v;
}

std::string Header(std::size_t n, u128 q, u128 scale, std::uint32_t poly_count) {
  std::string out;
  out.reserve(kHeaderSize + static_cast<std::size_t>(poly_count) * n * 16);
  out.append(kMagic);
  PutU128(out, static_cast<u128>(n));
  PutU128(out, q);
  PutU128(out, scale);
  PutU32(out, poly_count);
  return out;
}

void PutPoly(std::string& out, const Poly& p) {
  for (u128 c : p.coeffs()) PutU128(out, c);
}

// Validates framing against `ring` and returns the polynomials.
std::vector<Poly> ParseBody(std::string_view bytes, const RingPtr& ring,
                            std::uint32_t expected_polys, u128* scale) {
  const BlobHeader h = ParseHeader(bytes);
  const ring::Params& params = ring->params();
  if (h.n != params.n || h.q != params.q) {
    throw FormatError("blob was written for N=" + std::to_string(h.n) + ", q=" + ToString(h.q) +
                      " but the ring has N=" + std::to_string(params.n) +
                      ", q=" + ToString(params.q));
  }
  if (h.poly_count != expected_polys) {
    throw FormatError("expected " + std::to_string(expected_polys) + " polynomials, found " +
                      std::to_string(h.poly_count));
  }
  const std::size_t want = kHeaderSize + static_cast<std::size_t>(expected_polys) * h.n * 16;
  if (bytes.size() != want) {
    throw FormatError("blob is " + std::to_string(bytes.size()) + " bytes, expected " +
                      std::to_string(want));
  }
  std::vector<Poly> polys;
  std::size_t offset = kHeaderSize;
  for (std::uint32_t k = 0; k < expected_polys; ++k) {
    std::vector<u128> coeffs(h.n);
    for (auto& c : coeffs) {
      c = GetU128(bytes, offset);
      offset += 16;
    }
    try {
      polys.push_back(Poly::FromCoeffs(ring, std::move(coeffs)));
    } catch (const ParameterError& e) {
      throw FormatError(e.what());
    }
  }
  if (scale != nullptr) *scale = h.scale;
  return polys;
}

}  // namespace

BlobHeader ParseHeader(std::string_view bytes) {
  if (bytes.size() < kHeaderSize) throw FormatError("blob shorter than header");
  if (bytes.substr(0, kMagic.size()) != kMagic) throw FormatError("bad magic, expected SMC1");
  BlobHeader h;
  const u128 n = GetU128(bytes, 4);
  if (n > (static_cast<u128>(1) << 32)) throw FormatError("implausible ring degree");
  h.n = static_cast<std::size_t>(n);
  h.q = GetU128(bytes, 20);
  h.scale = GetU128(bytes, 36);
  h.poly_count = GetU32(bytes, 52);
  return h;
}

std::string SerializeParams(const ring::Params& params) {
  return Header(params.n, params.q, params.delta, 0);
}

std::string SerializePublicKey(const PublicKey& pk) {
  const ring::Params& p = pk.ring()->params();
  std::string out = Header(p.n, p.q, p.delta, 2);
  PutPoly(out, pk.pk1());
  PutPoly(out, pk.pk2());
  return out;
}

std::string SerializeSecretKey(const SecretKey& sk) {
  const ring::Params& p = sk.ring()->params();
  std::string out = Header(p.n, p.q, p.delta, 1);
  PutPoly(out, sk.s());
  return out;
}

std::string SerializeCiphertext(const Ciphertext& ct) {
  const Ciphertext coeff = ToCoefficientForm(ct);
  const ring::Params& p = ct.ring()->params();
  std::string out = Header(p.n, p.q, ct.scale(), 2);
  PutPoly(out, coeff.c1());
  PutPoly(out, coeff.c2());
  return out;
}

PublicKey ParsePublicKey(std::string_view bytes, const RingPtr& ring) {
  auto polys = ParseBody(bytes, ring, 2, nullptr);
  return PublicKey(std::move(polys[0]), std::move(polys[1]));
}

SecretKey ParseSecretKey(std::string_view bytes, const RingPtr& ring) {
  auto polys = ParseBody(bytes, ring, 1, nullptr);
  return SecretKey(std::move(polys[0]));
}

Ciphertext ParseCiphertext(std::string_view bytes, const RingPtr& ring) {
  u128 scale = 0;
  auto polys = ParseBody(bytes, ring, 2, &scale);
  if (scale == 0) throw FormatError("ciphertext scale is zero");
  Ciphertext ct(std::move(polys[0]), std::move(polys[1]), scale, Form::kCoefficient);
  return NativeForm(ring) == Form::kEvaluation ? ToEvaluationForm(ct) : ct;
}

std::string ParamsToJson(const ring::Params& params) {
  nlohmann::ordered_json j;
  j["n"] = params.n;
  j["q"] = ToString(params.q);
  j["delta"] = ToString(params.delta);
  j["sigma"] = params.sigma;
  j["radix"] = params.radix;
  j["seed"] = params.seed;
  return j.dump(2) + "\n";
}

ring::Params ParamsFromJson(std::string_view json) {
  try {
    const auto j = nlohmann::json::parse(json);
    ring::Params p;
    p.n = j.at("n").get<std::size_t>();
    p.q = ParseU128(j.at("q").get<std::string>());
    p.delta = ParseU128(j.at("delta").get<std::string>());
    p.sigma = j.at("sigma").get<double>();
    p.radix = j.at("radix").get<std::uint32_t>();
    p.seed = j.at("seed").get<std::uint64_t>();
    p.Validate();
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("params.json: ") + e.what());
  }
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void WriteFile(const std::filesystem::path& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("short write to " + path.string());
}

}  // namespace hecache::he
