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

// hecache command-line tool.
//
//   hecache keygen --profile default --seed 1 --out keys/
//   hecache enc --scheme smuche --value 3.25 --precision 0.25 --keys keys/ --out c.bin
//   hecache dec --keys keys/ --in c.bin
//   hecache bench --schemes ckks,smuche --synthetic "uniform(0,1000)":1000 --format markdown
//
// Exit codes: 0 success, 1 usage error, 2 correctness failure, 3 I/O error.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hecache/bench/report.hpp"
#include "hecache/bench/runner.hpp"
#include "hecache/bench/workload.hpp"
#include "hecache/cache/rache.hpp"
#include "hecache/cache/smuche.hpp"
#include "hecache/errors.hpp"
#include "hecache/he/scheme.hpp"
#include "hecache/he/serialize.hpp"

namespace fs = std::filesystem;
using namespace hecache;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCorrectness = 2;
constexpr int kExitIo = 3;

struct KeyFiles {
  ring::RingPtr ring;
  he::PublicKey pk;
  std::optional<he::SecretKey> sk;
};

KeyFiles LoadKeys(const fs::path& dir, bool need_secret) {
  const ring::Params params = he::ParamsFromJson(he::ReadFile(dir / "params.json"));
  ring::RingPtr ring = ring::Ring::Create(params);
  KeyFiles keys{ring, he::ParsePublicKey(he::ReadFile(dir / "public.key"), ring), std::nullopt};
  if (need_secret) keys.sk = he::ParseSecretKey(he::ReadFile(dir / "secret.key"), ring);
  return keys;
}

std::uint64_t FreshSeed() {
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

int Keygen(const std::string& profile, std::uint64_t seed, const fs::path& out) {
  const ring::Params params = ring::Params::FromProfile(profile, seed);
  const ring::RingPtr ring = ring::Ring::Create(params);
  ring::SeededStream rng(seed);
  const he::KeyPair keys = he::Keygen(ring, rng);
  std::error_code ec;
  fs::create_directories(out, ec);
  if (ec) throw IoError("cannot create " + out.string() + ": " + ec.message());
  he::WriteFile(out / "params.json", he::ParamsToJson(params));
  he::WriteFile(out / "public.key", he::SerializePublicKey(keys.pk));
  he::WriteFile(out / "secret.key", he::SerializeSecretKey(keys.sk));
  std::cerr << "wrote params.json, public.key, secret.key to " << out.string() << "\n";
  return kExitOk;
}

int Encrypt(const std::string& scheme, double value, double precision, std::size_t n_pivot,
            const fs::path& key_dir, const fs::path& out, std::uint64_t seed) {
  const KeyFiles keys = LoadKeys(key_dir, false);
  const ring::Params& params = keys.ring->params();
  ring::SeededStream rng(seed);
  std::optional<he::Ciphertext> ct;
  switch (bench::ParseScheme(scheme)) {
    case bench::Scheme::kCkks:
      ct = he::Encrypt(keys.pk, he::Plaintext::AtDefaultScale(value, keys.ring), rng);
      break;
    case bench::Scheme::kSmuche: {
      const smuche::SmuchePivotCache cache = smuche::Precompute(keys.pk, precision, rng);
      ct = smuche::Encrypt(cache, keys.pk, value, precision, rng);
      break;
    }
    case bench::Scheme::kRache: {
      // Rache works on integers: encrypt round(value / precision) and label the
      // result with scale delta / precision so decryption yields the real value.
      const long double units = std::roundl(static_cast<long double>(value) / precision);
      if (!(units >= 0.0L) || units >= 0x1p127L) {
        throw RangeError("Rache encrypts non-negative values");
      }
      const long double inv = 1.0L / precision;
      if (inv != std::floor(inv)) throw ParameterError("Rache precision must be 1/k for integer k");
      const rache::RachePivotCache cache = rache::Precompute(keys.pk, n_pivot, rng);
      const he::Ciphertext raw = rache::Encrypt(cache, static_cast<u128>(units), rng);
      ct = he::WithScale(raw, params.delta * static_cast<u128>(inv));
      break;
    }
  }
  he::WriteFile(out, he::SerializeCiphertext(*ct));
  return kExitOk;
}

int Decrypt(const fs::path& key_dir, const fs::path& in) {
  const KeyFiles keys = LoadKeys(key_dir, true);
  const he::Ciphertext ct = he::ParseCiphertext(he::ReadFile(in), keys.ring);
  std::printf("%.17g\n", he::Decrypt(*keys.sk, ct));
  return kExitOk;
}

std::vector<std::size_t> ParseCounts(const std::vector<std::string>& items, const char* what) {
  std::vector<std::size_t> out;
  for (const std::string& item : items) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != item.size() || item.empty()) {
      throw ParameterError(std::string("bad ") + what + " '" + item + "'");
    }
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

struct BenchArgs {
  std::vector<std::string> schemes{"ckks", "rache", "smuche"};
  std::vector<std::string> n_pivots{"16"};
  std::vector<std::string> messages;
  std::string dataset;
  std::string column;
  std::string synthetic;
  std::string profile = "default";
  std::uint32_t radix = 0;
  std::size_t repeat = 5;
  std::uint64_t seed = 0;
  std::string format = "markdown";
  std::string out;
  bool no_timing = false;
};

int Bench(const BenchArgs& args) {
  bench::BenchConfig config;
  for (const std::string& s : args.schemes) config.schemes.push_back(bench::ParseScheme(s));
  config.params = ring::Params::FromProfile(args.profile, args.seed);
  if (args.radix != 0) config.params.radix = args.radix;
  config.n_pivots = ParseCounts(args.n_pivots, "nPivot");
  config.message_counts = ParseCounts(args.messages, "message count");
  config.repeat = args.repeat;
  config.seed = args.seed;
  const bench::ReportFormat format = bench::ParseReportFormat(args.format);

  if (!args.dataset.empty()) {
    if (args.column.empty()) throw ParameterError("--dataset needs --column");
    config.workload = bench::LoadDataset(args.dataset, args.column, config.params.radix);
    if (config.workload.skipped_rows > 0) {
      std::cerr << "warning: skipped " << config.workload.skipped_rows
                << " rows with unparseable cells\n";
    }
  } else {
    const auto colon = args.synthetic.rfind(':');
    if (colon == std::string::npos) throw ParameterError("--synthetic expects SPEC:COUNT");
    const std::size_t count = ParseCounts({args.synthetic.substr(colon + 1)}, "count").front();
    const bench::SyntheticSpec spec =
        bench::SyntheticSpec::Parse(args.synthetic.substr(0, colon));
    if (spec.kind == bench::SyntheticSpec::Kind::kPivotSpace) {
      if (count == 0) throw ParameterError("synthetic workload needs count >= 1");
      config.pivot_space_count = count;
    } else {
      config.workload = bench::GenSynthetic(spec, count, args.seed, config.params.radix);
    }
  }

  const bench::BenchReport report = bench::RunBenchmark(config);
  const std::string text =
      bench::EmitReport(report, format, {.include_timing = !args.no_timing});
  if (args.out.empty()) {
    std::cout << text;
  } else {
    he::WriteFile(args.out, text);
  }
  if (!report.Correct()) {
    std::cerr << "error: at least one decryption exceeded its error bound\n";
    return kExitCorrectness;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ciphertext caching for RLWE encryption: keygen, enc, dec, bench"};
  app.require_subcommand(1);

  std::string profile = "default";
  std::uint64_t seed = 0;
  std::string out;
  auto* keygen = app.add_subcommand("keygen", "Generate parameters and a key pair");
  keygen->add_option("--profile", profile, "Parameter profile")
      ->check(CLI::IsMember({"default", "desk"}));
  keygen->add_option("--seed", seed, "Seed for key generation");
  keygen->add_option("--out", out, "Output directory")->required();

  std::string scheme;
  double value = 0.0;
  double precision = 1.0 / 64;
  std::size_t n_pivot = 64;
  std::string keys;
  std::optional<std::uint64_t> enc_seed;
  auto* enc = app.add_subcommand("enc", "Encrypt one value");
  enc->add_option("--scheme", scheme, "ckks, rache or smuche")
      ->required()
      ->check(CLI::IsMember({"ckks", "rache", "smuche"}));
  enc->add_option("--value", value, "Plaintext")->required();
  enc->add_option("--precision", precision, "Fractional step, a power of 1/r");
  enc->add_option("--npivot", n_pivot, "Rache pivots");
  enc->add_option("--keys", keys, "Key directory")->required();
  enc->add_option("--out", out, "Ciphertext file")->required();
  enc->add_option("--seed", enc_seed, "Seed for encryption randomness");

  std::string in;
  auto* dec = app.add_subcommand("dec", "Decrypt a ciphertext");
  dec->add_option("--keys", keys, "Key directory")->required();
  dec->add_option("--in", in, "Ciphertext file")->required();

  BenchArgs b;
  auto* bench_cmd = app.add_subcommand("bench", "Time CkksEnc, RacheEnc and SmucheEnc");
  bench_cmd->add_option("--schemes", b.schemes, "Schemes to run")->delimiter(',');
  bench_cmd->add_option("--npivot", b.n_pivots, "Rache pivot counts")->delimiter(',');
  bench_cmd->add_option("--messages", b.messages, "Message counts")->delimiter(',');
  auto* dataset = bench_cmd->add_option("--dataset", b.dataset, "CSV file with a header row");
  bench_cmd->add_option("--column", b.column, "Column name or zero-based index");
  auto* synthetic = bench_cmd->add_option(
      "--synthetic", b.synthetic,
      "SPEC:COUNT with SPEC uniform(lo,hi[,k]), integers(lo,hi) or pivotspace");
  dataset->excludes(synthetic);
  bench_cmd->add_option("--profile", b.profile, "Parameter profile")
      ->check(CLI::IsMember({"default", "desk"}));
  bench_cmd->add_option("--radix", b.radix, "Radix r (default from profile)");
  bench_cmd->add_option("--repeat", b.repeat, "Timed repetitions, at least 5");
  bench_cmd->add_option("--seed", b.seed, "Seed for keys, caches and workload");
  bench_cmd->add_option("--format", b.format, "csv or markdown")
      ->check(CLI::IsMember({"csv", "markdown"}));
  bench_cmd->add_option("--out", b.out, "Report file (default stdout)");
  bench_cmd->add_flag("--no-timing", b.no_timing, "Blank timing columns");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*keygen) return Keygen(profile, seed, out);
    if (*enc) {
      return Encrypt(scheme, value, precision, n_pivot, keys, out,
                     enc_seed ? *enc_seed : FreshSeed());
    }
    if (*dec) return Decrypt(keys, in);
    if (*bench_cmd) {
      if (b.dataset.empty() && b.synthetic.empty()) {
        std::cerr << "error: bench needs --dataset or --synthetic\n";
        return kExitUsage;
      }
      return Bench(b);
    }
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
