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

#include "hecache/bench/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <optional>

#include "hecache/cache/rache.hpp"
#include "hecache/cache/smuche.hpp"
#include "hecache/errors.hpp"
#include "hecache/he/scheme.hpp"

namespace hecache::bench {
namespace {

using Clock = std::chrono::steady_clock;

struct Check {
  long double error = 0.0L;
  long double bound = 0.0L;
};

// One scheme bound to a workload: value i is encrypted by Encrypt(i, rng) and
// checked by Verify(i, ct).
struct Job {
  std::function<he::Ciphertext(std::size_t, ring::RandomSource&)> encrypt;
  std::function<Check(std::size_t, const he::Ciphertext&)> verify;
};

double Median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2.0;
}

// Distance between the decrypted constant coefficient and `expected`, in
// units of the scale.
long double EncodedError(const he::SecretKey& sk, const he::Ciphertext& ct, i128 expected) {
  const ring::Poly p = he::DecryptToPoly(sk, ct);
  const i128 diff = p.modulus().Lift(p[0]) - expected;
  return std::fabs(static_cast<long double>(diff)) / static_cast<long double>(ct.scale());
}

long double PowInv(std::uint32_t radix, std::size_t k) {
  long double v = 1.0L;
  for (std::size_t i = 0; i < k; ++i) v /= radix;
  return v;
}

class Runner {
 public:
  explicit Runner(const BenchConfig& config)
      : config_(config),
        ring_(ring::Ring::Create(config.params)),
        master_(config.seed),
        keys_(he::Keygen(ring_, master_)),
        tol_(he::NoiseTolerance(config.params)) {}

  BenchRow Run(Scheme scheme, std::size_t n_pivot, std::span<const double> values,
               double precision_inv) {
    BenchRow row;
    row.scheme = scheme;
    row.n_pivot = n_pivot;
    row.messages = values.size();
    try {
      const Job job = MakeJob(scheme, n_pivot, values, precision_inv);
      Measure(job, values.size(), row);
    } catch (const std::exception& e) {
      row = BenchRow();
      row.scheme = scheme;
      row.n_pivot = n_pivot;
      row.messages = values.size();
      row.status = RowStatus::kFailed;
      row.detail = e.what();
    }
    return row;
  }

 private:
  Job MakeJob(Scheme scheme, std::size_t n_pivot, std::span<const double> values,
              double precision_inv) {
    switch (scheme) {
      case Scheme::kCkks:
        return CkksJob(values);
      case Scheme::kSmuche:
        return SmucheJob(values, precision_inv);
      case Scheme::kRache:
        return RacheJob(n_pivot, values, precision_inv);
    }
    throw ParameterError("unknown scheme");
  }

  Job CkksJob(std::span<const double> values) {
    const u128 delta = config_.params.delta;
    std::vector<i128> expected;
    expected.reserve(values.size());
    for (double v : values) {
      expected.push_back(ring_->modulus().Lift(he::Encode(v, delta, ring_)[0]));
    }
    return {
        [this, values, delta](std::size_t i, ring::RandomSource& rng) {
          return he::Encrypt(keys_.pk, he::Plaintext{values[i], delta}, rng);
        },
        [this, values, delta, expected = std::move(expected)](std::size_t i,
                                                              const he::Ciphertext& ct) {
          const long double rounding = std::fabs(
              static_cast<long double>(expected[i]) / delta - static_cast<long double>(values[i]));
          return Check{EncodedError(keys_.sk, ct, expected[i]) + rounding, tol_};
        }};
  }

  Job SmucheJob(std::span<const double> values, double precision_inv) {
    const smuche::SmuchePivotCache& cache = SmucheCache(precision_inv);
    const std::uint32_t r = cache.radix();
    const std::size_t idx = smuche::SelectPivot(precision_inv, r, cache.max_idx());
    const u128 limit = smuche::MaxScalar(config_.params);
    // The pivot's encoded value, round(delta / r^idx).
    const u128 delta = config_.params.delta;
    u128 r_pow = 1;
    for (std::size_t i = 0; i < idx; ++i) r_pow *= r;
    const i128 pivot_encoded = static_cast<i128>((delta + r_pow / 2) / r_pow);

    std::vector<i128> z(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
      z[i] = smuche::ScalarFor(values[i], r, idx);
      const u128 mag = z[i] >= 0 ? static_cast<u128>(z[i]) : static_cast<u128>(-z[i]);
      if (mag > limit) {
        throw RangeError("value " + std::to_string(values[i]) + " needs scalar " +
                         ToString(z[i]) + " above the noise budget " + ToString(limit));
      }
    }
    const long double step = PowInv(r, idx);
    return {
        [this, values, precision_inv, &cache](std::size_t i, ring::RandomSource& rng) {
          return smuche::Encrypt(cache, keys_.pk, values[i], precision_inv, rng);
        },
        [this, z = std::move(z), pivot_encoded, step, delta](std::size_t i,
                                                             const he::Ciphertext& ct) {
          const long double zi = static_cast<long double>(z[i]);
          // Pivot rounding: z * (round(delta / r^idx) / delta - r^-idx).
          const long double rounding =
              std::fabs(zi * (static_cast<long double>(pivot_encoded) / delta - step));
          const long double err = EncodedError(keys_.sk, ct, z[i] * pivot_encoded) + rounding;
          return Check{err, (std::fabs(zi) + 1.0L) * tol_};
        }};
  }

  Job RacheJob(std::size_t n_pivot, std::span<const double> values, double precision_inv) {
    if (n_pivot == 0) throw ParameterError("Rache needs nPivot");
    const rache::RachePivotCache& cache = RacheCache(n_pivot);
    const u128 bound = cache.PlaintextBound();
    std::vector<u128> ints(values.size());
    std::vector<long double> bounds(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
      const long double q = std::roundl(static_cast<long double>(values[i]) / precision_inv);
      if (!(q >= 0.0L)) {
        throw RangeError("Rache encrypts non-negative integers; got " +
                         std::to_string(values[i]));
      }
      if (q >= 0x1p127L || static_cast<u128>(q) >= bound) {
        throw RangeError("value " + std::to_string(values[i]) + " is outside the plaintext "
                         "space r^(nPivot-1) of " + std::to_string(n_pivot) + " pivots");
      }
      ints[i] = static_cast<u128>(q);
      const auto digits = rache::DigitDecompose(ints[i], cache.radix(), cache.size() - 1);
      long double digit_sum = 0.0L;
      for (std::uint32_t d : digits) digit_sum += d;
      const long double mask = static_cast<long double>(rache::MaskTermsFor(cache, digits.size()));
      bounds[i] = (digit_sum + (cache.radix() + 1.0L) * mask + 1.0L) * tol_ * precision_inv;
    }
    const u128 delta = cache.scale();
    std::vector<u128> expected = ints;
    return {
        [&cache, ints = std::move(ints)](std::size_t i, ring::RandomSource& rng) {
          return rache::Encrypt(cache, ints[i], rng);
        },
        [this, expected = std::move(expected), bounds = std::move(bounds), delta,
         precision_inv](std::size_t i, const he::Ciphertext& ct) {
          const i128 target = static_cast<i128>(expected[i] * delta);
          return Check{EncodedError(keys_.sk, ct, target) * precision_inv, bounds[i]};
        }};
  }

  const smuche::SmuchePivotCache& SmucheCache(double precision_inv) {
    auto it = smuche_.find(precision_inv);
    if (it == smuche_.end()) {
      it = smuche_.emplace(precision_inv, smuche::Precompute(keys_.pk, precision_inv, master_))
               .first;
    }
    return it->second;
  }

  const rache::RachePivotCache& RacheCache(std::size_t n_pivot) {
    auto it = rache_.find(n_pivot);
    if (it == rache_.end()) {
      it = rache_.emplace(n_pivot, rache::Precompute(keys_.pk, n_pivot, master_)).first;
    }
    return it->second;
  }

  void Measure(const Job& job, std::size_t count, BenchRow& row) {
    std::vector<double> totals;
    long double worst = 0.0L;
    long double bound = 0.0L;
    bool within = true;
    for (std::size_t rep = 0; rep < config_.repeat; ++rep) {
      const std::unique_ptr<ring::RandomSource> rng = master_.Split();
      Clock::duration elapsed{};
      ring::OpCounts ops;
      for (std::size_t i = 0; i < count; ++i) {
        const ring::OpCountScope scope;
        const auto start = Clock::now();
        const he::Ciphertext ct = job.encrypt(i, *rng);
        elapsed += Clock::now() - start;
        const ring::OpCounts delta = scope.Delta();
        ops.poly_add += delta.poly_add;
        ops.poly_mul += delta.poly_mul;
        ops.poly_scalar_mul += delta.poly_scalar_mul;

        const Check check = job.verify(i, ct);
        worst = std::max(worst, check.error);
        bound = std::max(bound, check.bound);
        if (!(check.error <= check.bound)) within = false;
      }
      if (rep == 0) row.ring_ops = ops.total();
      totals.push_back(std::chrono::duration<double, std::milli>(elapsed).count());
    }
    row.total_ms = Median(std::move(totals));
    row.per_message_ms = row.total_ms / static_cast<double>(count);
    row.max_abs_error = static_cast<double>(worst);
    row.error_bound = static_cast<double>(bound);
    row.status = within ? RowStatus::kOk : RowStatus::kDecryptError;
    if (!within) row.detail = "decryption error above bound";
  }

  const BenchConfig& config_;
  ring::RingPtr ring_;
  ring::SeededStream master_;
  he::KeyPair keys_;
  double tol_;
  std::map<double, smuche::SmuchePivotCache> smuche_;
  std::map<std::size_t, rache::RachePivotCache> rache_;
};

void Validate(const BenchConfig& config) {
  config.params.Validate();
  if (config.schemes.empty()) throw ParameterError("no schemes selected");
  if (config.repeat < 5) throw ParameterError("repeat must be at least 5");
  const bool rache = std::find(config.schemes.begin(), config.schemes.end(), Scheme::kRache) !=
                     config.schemes.end();
  if ((rache || config.pivot_space_count > 0) && config.n_pivots.empty()) {
    throw ParameterError("nPivot list is empty");
  }
  const std::size_t available =
      config.pivot_space_count > 0 ? config.pivot_space_count : config.workload.values.size();
  if (available == 0) throw ParameterError("workload is empty");
  for (std::size_t m : config.message_counts) {
    if (m == 0 || m > available) {
      throw ParameterError("message count " + std::to_string(m) + " not in [1, " +
                           std::to_string(available) + "]");
    }
  }
}

void FillRatios(std::vector<BenchRow>& rows) {
  for (BenchRow& row : rows) {
    if (row.status == RowStatus::kFailed) continue;
    for (const BenchRow& ckks : rows) {
      if (ckks.scheme != Scheme::kCkks || ckks.status == RowStatus::kFailed) continue;
      if (ckks.messages != row.messages) continue;
      if (ckks.n_pivot != 0 && ckks.n_pivot != row.n_pivot) continue;
      if (ckks.total_ms > 0.0) row.ratio_over_ckks = row.total_ms / ckks.total_ms;
      break;
    }
  }
}

}  // namespace

std::string SchemeName(Scheme s) {
  switch (s) {
    case Scheme::kCkks:
      return "ckks";
    case Scheme::kRache:
      return "rache";
    case Scheme::kSmuche:
      return "smuche";
  }
  return "?";
}

Scheme ParseScheme(std::string_view name) {
  if (name == "ckks") return Scheme::kCkks;
  if (name == "rache") return Scheme::kRache;
  if (name == "smuche") return Scheme::kSmuche;
  throw ParameterError("unknown scheme '" + std::string(name) + "'");
}

bool BenchReport::Correct() const {
  return std::none_of(rows.begin(), rows.end(),
                      [](const BenchRow& r) { return r.status == RowStatus::kDecryptError; });
}

BenchReport RunBenchmark(const BenchConfig& config) {
  Validate(config);
  Runner runner(config);
  BenchReport report;
  report.params = config.params;
  report.seed = config.seed;
  report.repeat = config.repeat;

  const std::size_t available =
      config.pivot_space_count > 0 ? config.pivot_space_count : config.workload.values.size();
  std::vector<std::size_t> counts = config.message_counts;
  if (counts.empty()) counts.push_back(available);

  if (config.pivot_space_count > 0) {
    report.workload = "pivotspace";
    for (std::size_t np : config.n_pivots) {
      const Workload w = GenPivotSpace(np, config.pivot_space_count, config.seed ^ np,
                                       config.params.radix);
      for (std::size_t m : counts) {
        const std::span<const double> values(w.values.data(), m);
        for (Scheme s : config.schemes) {
          report.rows.push_back(runner.Run(s, np, values, w.precision_inv));
        }
      }
    }
  } else {
    const Workload& w = config.workload;
    report.workload = w.name;
    for (std::size_t m : counts) {
      const std::span<const double> values(w.values.data(), m);
      for (Scheme s : config.schemes) {
        if (s == Scheme::kRache) {
          for (std::size_t np : config.n_pivots) {
            report.rows.push_back(runner.Run(s, np, values, w.precision_inv));
          }
        } else {
          report.rows.push_back(runner.Run(s, 0, values, w.precision_inv));
        }
      }
    }
  }
  FillRatios(report.rows);
  return report;
}

}  // namespace hecache::bench
