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

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "flowcast/evaluation.hpp"
#include "flowcast/kalman.hpp"
#include "flowcast/vehicle_pcu.hpp"

namespace flowcast {

enum class EvaluateMode { Predicted, Filtered };

std::string_view to_string(EvaluateMode mode) noexcept;
std::string_view to_string(PercentDenominator d) noexcept;

/// Everything a pipeline run needs besides its input. Noise variances left
/// unset are estimated from the series.
struct RunConfig {
  std::int64_t bin_duration = kDefaultBinDuration;
  double p0 = kDefaultInitialVariance;
  double m_t = 1.0;
  double m_m = 1.0;
  std::optional<double> q;
  std::optional<double> r;
  PercentDenominator percent_denominator = PercentDenominator::Forecast;
  EvaluateMode evaluate_mode = EvaluateMode::Predicted;
  std::size_t histogram_bins = 8;
  std::size_t horizon = 3;
  std::filesystem::path out_dir = "results";
  PcuTable pcu_table;

  /// Throws Error(InvalidConfig) naming the offending field.
  void validate() const;
};

/// Applies one `key = value` setting. Recognized keys: bin_duration, p0,
/// m_t, m_m, q, r, percent_denominator (forecast|observed), evaluate_mode
/// (predicted|filtered), histogram_bins, horizon, out_dir and
/// pcu.<vehicle class>. Throws Error(InvalidConfig) for unknown keys or bad
/// values.
void apply_setting(RunConfig& config, std::string_view key, std::string_view value);

/// Flat key=value text; '#' starts a comment, blank lines ignored.
void apply_config_text(RunConfig& config, std::string_view text);

/// Throws FileNotFound or InvalidConfig.
void apply_config_file(RunConfig& config, const std::filesystem::path& path);

}  // namespace flowcast
