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

#include "hecache/bench/workload.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>

#include "hecache/errors.hpp"

namespace hecache::bench {
namespace {

// Precision cap for values whose decimal expansion has no finite base-r form.
constexpr int kMaxFractionalDigits = 60;

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

// Splits one CSV record. Quoted fields may contain commas and "" escapes.
std::vector<std::string> SplitRecord(std::string_view line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur.push_back('"');
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  fields.push_back(std::move(cur));
  return fields;
}

std::optional<double> ParseReal(std::string_view text) {
  text = Trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty()) return std::nullopt;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v)) {
    return std::nullopt;
  }
  return v;
}

// Decimal digits after the point, net of any exponent: "2.25" -> 2,
// "1.5e-3" -> 4, "12e2" -> 0.
int DecimalFractionDigits(std::string_view text) {
  text = Trim(text);
  int exponent = 0;
  if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = text.substr(e + 1);
    if (!exp_text.empty() && exp_text.front() == '+') exp_text.remove_prefix(1);
    std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), exponent);
    text = text.substr(0, e);
  }
  int digits = 0;
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    digits = static_cast<int>(text.size() - dot - 1);
  }
  return std::max(0, digits - exponent);
}

long double PowR(std::uint32_t radix, int k) {
  long double v = 1.0L;
  for (int i = 0; i < k; ++i) v /= radix;
  return v;
}

// Smallest k with r^-k <= 10^-d.
int DigitsForDecimal(std::uint32_t radix, int d) {
  const long double target = std::pow(10.0L, -d);
  int k = 0;
  while (PowR(radix, k) > target && k < kMaxFractionalDigits) ++k;
  return k;
}

// Smallest k <= max_digits with value * r^k integral, else max_digits.
int BinaryDigitsOf(double value, std::uint32_t radix, int max_digits) {
  long double scaled = value;
  for (int k = 0; k < max_digits; ++k) {
    if (scaled == std::floor(scaled)) return k;
    scaled *= radix;
  }
  return max_digits;
}

double ParseBound(std::string_view text) {
  text = Trim(text);
  if (const auto caret = text.find('^'); caret != std::string_view::npos) {
    const auto base = ParseReal(text.substr(0, caret));
    const auto exp = ParseReal(text.substr(caret + 1));
    if (!base || !exp) throw ParameterError("malformed bound '" + std::string(text) + "'");
    return std::pow(*base, *exp);
  }
  const auto v = ParseReal(text);
  if (!v) throw ParameterError("malformed bound '" + std::string(text) + "'");
  return *v;
}

std::string FormatBound(double v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

}  // namespace

double BinaryPrecisionOf(double value, std::uint32_t radix, int max_digits) {
  if (radix < 2) throw ParameterError("radix must be at least 2");
  return static_cast<double>(PowR(radix, BinaryDigitsOf(value, radix, max_digits)));
}

Workload LoadDataset(const std::filesystem::path& path, std::string_view column,
                     std::uint32_t radix) {
  if (radix < 2) throw ParameterError("radix must be at least 2");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open dataset " + path.string());

  std::string line;
  if (!std::getline(in, line)) throw FormatError("dataset " + path.string() + " has no rows");
  if (line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
  const std::vector<std::string> header = SplitRecord(line);

  std::size_t col = header.size();
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (Trim(header[i]) == Trim(column)) {
      col = i;
      break;
    }
  }
  if (col == header.size()) {
    std::size_t index = 0;
    const std::string_view t = Trim(column);
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), index);
    if (ec != std::errc() || ptr != t.data() + t.size() || index >= header.size()) {
      throw FormatError("dataset " + path.string() + " has no column '" + std::string(column) +
                        "'");
    }
    col = index;
  }

  Workload w;
  w.name = path.filename().string() + ":" + std::string(Trim(header[col]));
  w.source = WorkloadSource::kCsv;
  int finest = 0;
  while (std::getline(in, line)) {
    if (Trim(line).empty()) continue;
    const auto fields = SplitRecord(line);
    const std::optional<double> v =
        col < fields.size() ? ParseReal(fields[col]) : std::optional<double>();
    if (!v) {
      ++w.skipped_rows;
      continue;
    }
    const int cap = DigitsForDecimal(radix, DecimalFractionDigits(fields[col]));
    finest = std::max(finest, BinaryDigitsOf(*v, radix, cap));
    w.values.push_back(*v);
  }
  if (w.values.empty()) {
    throw FormatError("dataset " + path.string() + " has zero parseable rows in column '" +
                      std::string(column) + "'");
  }
  w.precision_inv = static_cast<double>(PowR(radix, finest));
  return w;
}

SyntheticSpec SyntheticSpec::Parse(std::string_view text) {
  text = Trim(text);
  SyntheticSpec spec;
  if (text == "pivotspace") {
    spec.kind = Kind::kPivotSpace;
    return spec;
  }
  const auto open = text.find('(');
  if (open == std::string_view::npos || text.empty() || text.back() != ')') {
    throw ParameterError("malformed synthetic spec '" + std::string(text) + "'");
  }
  const std::string_view name = Trim(text.substr(0, open));
  const std::string args(text.substr(open + 1, text.size() - open - 2));
  const std::vector<std::string> parts = SplitRecord(args);

  if (name == "uniform") {
    spec.kind = Kind::kUniform;
    if (parts.size() != 2 && parts.size() != 3) {
      throw ParameterError("uniform takes (lo,hi) or (lo,hi,digits)");
    }
    if (parts.size() == 3) {
      const double k = ParseBound(parts[2]);
      if (k < 0 || k > kMaxFractionalDigits || k != std::floor(k)) {
        throw ParameterError("uniform digits must be an integer in [0, 60]");
      }
      spec.fractional_digits = static_cast<int>(k);
    }
  } else if (name == "integers") {
    spec.kind = Kind::kIntegers;
    if (parts.size() != 2) throw ParameterError("integers takes (lo,hi)");
  } else {
    throw ParameterError("unknown distribution '" + std::string(name) + "'");
  }
  spec.lo = ParseBound(parts[0]);
  spec.hi = ParseBound(parts[1]);
  if (!(spec.lo < spec.hi)) throw ParameterError("synthetic spec needs lo < hi");
  if (spec.kind == Kind::kIntegers) {
    constexpr double kLimit = 0x1p62;
    if (spec.lo != std::floor(spec.lo) || spec.hi != std::floor(spec.hi) ||
        std::fabs(spec.lo) > kLimit || std::fabs(spec.hi) > kLimit) {
      throw ParameterError("integers bounds must be integers with magnitude <= 2^62");
    }
  }
  return spec;
}

std::string SyntheticSpec::ToString() const {
  switch (kind) {
    case Kind::kPivotSpace:
      return "pivotspace";
    case Kind::kIntegers:
      return "integers(" + FormatBound(lo) + "," + FormatBound(hi) + ")";
    case Kind::kUniform:
      break;
  }
  return "uniform(" + FormatBound(lo) + "," + FormatBound(hi) + "," +
         std::to_string(fractional_digits) + ")";
}

Workload GenSynthetic(const SyntheticSpec& spec, std::size_t count, std::uint64_t seed,
                      std::uint32_t radix) {
  if (count == 0) throw ParameterError("synthetic workload needs count >= 1");
  if (radix < 2) throw ParameterError("radix must be at least 2");
  if (spec.kind == SyntheticSpec::Kind::kPivotSpace) {
    throw ParameterError("pivotspace depends on nPivot; use GenPivotSpace");
  }
  std::mt19937_64 engine(seed);
  Workload w;
  w.name = spec.ToString();
  w.source = WorkloadSource::kSynthetic;
  w.values.reserve(count);
  if (spec.kind == SyntheticSpec::Kind::kIntegers) {
    std::uniform_int_distribution<std::int64_t> dist(static_cast<std::int64_t>(spec.lo),
                                                     static_cast<std::int64_t>(spec.hi) - 1);
    for (std::size_t i = 0; i < count; ++i) w.values.push_back(static_cast<double>(dist(engine)));
    w.precision_inv = 1.0;
    return w;
  }
  const long double step = PowR(radix, spec.fractional_digits);
  std::uniform_real_distribution<double> dist(spec.lo, spec.hi);
  for (std::size_t i = 0; i < count; ++i) {
    const long double v = std::floor(dist(engine) / step) * step;
    w.values.push_back(static_cast<double>(v));
  }
  w.precision_inv = static_cast<double>(step);
  return w;
}

Workload GenPivotSpace(std::size_t n_pivot, std::size_t count, std::uint64_t seed,
                       std::uint32_t radix) {
  if (count == 0) throw ParameterError("synthetic workload needs count >= 1");
  if (n_pivot < 2) throw ParameterError("nPivot must be at least 2");
  if (radix < 2) throw ParameterError("radix must be at least 2");
  constexpr std::uint64_t kCap = std::uint64_t{1} << 63;
  std::uint64_t bound = 1;
  for (std::size_t i = 0; i + 1 < n_pivot && bound < kCap; ++i) {
    bound = bound > kCap / radix ? kCap : bound * radix;
  }
  std::mt19937_64 engine(seed);
  std::uniform_int_distribution<std::uint64_t> dist(0, bound - 1);
  Workload w;
  w.name = "pivotspace(" + std::to_string(n_pivot) + ")";
  w.source = WorkloadSource::kSynthetic;
  w.values.reserve(count);
  const double limit = static_cast<double>(bound);
  for (std::size_t i = 0; i < count; ++i) {
    double v = static_cast<double>(dist(engine));
    // Rounding to double can land on the exclusive bound.
    if (v >= limit) v = std::nextafter(limit, 0.0);
    w.values.push_back(v);
  }
  w.precision_inv = 1.0;
  return w;
}

}  // namespace hecache::bench
