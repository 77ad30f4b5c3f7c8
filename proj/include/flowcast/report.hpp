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

#include <filesystem>
#include <string>

#include <json.hpp>

#include "flowcast/config.hpp"
#include "flowcast/evaluation.hpp"
#include "flowcast/pipeline.hpp"

namespace flowcast {

inline constexpr int kReportSchemaVersion = 1;

/// Report document, schema 1. Key order is fixed:
///
///   schema, mape_percent, rmspe_percent, pearson_r, r_squared, trend_slope,
///   mape_band, rmspe_band, observed_stats{...}, predicted_stats{...},
///   params{m_t, m_m, q, r, p0}, noise_estimated, evaluate_mode,
///   percent_denominator, bin_duration, next_forecasts[]
///
/// Stats objects carry count, mean, std_dev, variance, min, max, median, q1,
/// q3. Numbers are written as shortest round-trip decimals.
nlohmann::ordered_json report_to_json(const PipelineResult& result, const RunConfig& config);

std::string report_to_string(const PipelineResult& result, const RunConfig& config);

/// Reads the metric fields back. Throws Error(MalformedRow) on a missing or
/// mistyped key or a schema other than 1.
EvaluationReport report_from_json(const nlohmann::json& doc);

/// Writes the JSON report and the per-bin trace CSV (both atomically).
void write_report(const PipelineResult& result, const RunConfig& config,
                  const std::filesystem::path& json_path, const std::filesystem::path& trace_csv_path);

}  // namespace flowcast
