// Copyright 2026 The Flowcast Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "flowcast/config.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "flowcast/error.hpp"

namespace flowcast {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void invalid(std::string_view key, std::string_view value) {
  throw Error(ErrorKind::InvalidConfig, "bad value '" + std::string(value) + "' for " + std::string(key));
}

double to_double(std::string_view key, std::string_view value) {
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size() || value.empty()) invalid(key, value);
  return out;
}

template <typename Int>
Int to_int(std::string_view key, std::string_view value) {
  Int out{};
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size() || value.empty()) invalid(key, value);
  return out;
}

}  // namespace

std::string_view to_string(EvaluateMode mode) noexcept {
  return mode == EvaluateMode::Predicted ? "predicted" : "filtered";
}

std::string_view to_string(PercentDenominator d) noexcept {
  return d == PercentDenominator::Forecast ? "forecast" : "observed";
}

void RunConfig::validate() const {
  auto fail = [](const std::string& what) { throw Error(ErrorKind::InvalidConfig, what); };
  if (bin_duration <= 0) fail("bin_duration must be > 0");
  if (!(std::isfinite(p0) && p0 >= 0.0)) fail("p0 must be finite and >= 0");
  if (!std::isfinite(m_t)) fail("m_t must be finite");
  if (!std::isfinite(m_m) || m_m == 0.0) fail("m_m must be finite and nonzero");
  if (q && !(std::isfinite(*q) && *q >= 0.0)) fail("q must be finite and >= 0");
  if (r && !(std::isfinite(*r) && *r >= 0.0)) fail("r must be finite and >= 0");
  if (q && r && *q + *r <= 0.0) fail("q + r must be > 0");
  if (histogram_bins == 0) fail("histogram_bins must be >= 1");
  if (horizon == 0) fail("horizon must be >= 1");
}

void apply_setting(RunConfig& config, std::string_view key, std::string_view value) {
  key = trim(key);
  value = trim(value);
  if (key == "bin_duration") {
    config.bin_duration = to_int<std::int64_t>(key, value);
  } else if (key == "p0") {
    config.p0 = to_double(key, value);
  } else if (key == "m_t") {
    config.m_t = to_double(key, value);
  } else if (key == "m_m") {
    config.m_m = to_double(key, value);
  } else if (key == "q") {
    config.q = to_double(key, value);
  } else if (key == "r") {
    config.r = to_double(key, value);
  } else if (key == "percent_denominator") {
    if (value == "forecast") {
      config.percent_denominator = PercentDenominator::Forecast;
    } else if (value == "observed") {
      config.percent_denominator = PercentDenominator::Observed;
    } else {
      invalid(key, value);
    }
  } else if (key == "evaluate_mode") {
    if (value == "predicted") {
      config.evaluate_mode = EvaluateMode::Predicted;
    } else if (value == "filtered") {
      config.evaluate_mode = EvaluateMode::Filtered;
    } else {
      invalid(key, value);
    }
  } else if (key == "histogram_bins") {
    config.histogram_bins = to_int<std::size_t>(key, value);
  } else if (key == "horizon") {
    config.horizon = to_int<std::size_t>(key, value);
  } else if (key == "out_dir") {
    config.out_dir = std::string(value);
  } else if (key.rfind("pcu.", 0) == 0) {
    VehicleClass c{};
    try {
      c = parse_vehicle_class(key.substr(4));
    } catch (const Error&) {
      throw Error(ErrorKind::InvalidConfig, "unknown key '" + std::string(key) + "'");
    }
    try {
      config.pcu_table = config.pcu_table.with_factor(c, to_double(key, value));
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::InvalidConfig) throw;
      invalid(key, value);
    }
  } else {
    throw Error(ErrorKind::InvalidConfig, "unknown key '" + std::string(key) + "'");
  }
}

void apply_config_text(RunConfig& config, std::string_view text) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorKind::InvalidConfig, "line " + std::to_string(line_no) + ": expected key=value");
    }
    apply_setting(config, line.substr(0, eq), line.substr(eq + 1));
  }
}

void apply_config_file(RunConfig& config, const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::FileNotFound, "config " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  apply_config_text(config, text.str());
}

}  // namespace flowcast
