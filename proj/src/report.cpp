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

#include "flowcast/report.hpp"

#include "flowcast/csv_io.hpp"
#include "flowcast/error.hpp"

namespace flowcast {

namespace {

nlohmann::ordered_json stats_json(const DescriptiveStats& s) {
  nlohmann::ordered_json j;
  j["count"] = s.count;
  j["mean"] = s.mean;
  j["std_dev"] = s.std_dev;
  j["variance"] = s.variance;
  j["min"] = s.min;
  j["max"] = s.max;
  j["median"] = s.median;
  j["q1"] = s.q1;
  j["q3"] = s.q3;
  return j;
}

DescriptiveStats stats_from(const nlohmann::json& j) {
  DescriptiveStats s;
  s.count = j.at("count").get<std::size_t>();
  s.mean = j.at("mean").get<double>();
  s.std_dev = j.at("std_dev").get<double>();
  s.variance = j.at("variance").get<double>();
  s.min = j.at("min").get<double>();
  s.max = j.at("max").get<double>();
  s.median = j.at("median").get<double>();
  s.q1 = j.at("q1").get<double>();
  s.q3 = j.at("q3").get<double>();
  return s;
}

MapeBand mape_band_from(const std::string& s) {
  for (MapeBand b : {MapeBand::HighAccuracy, MapeBand::Good, MapeBand::Decent, MapeBand::Bad}) {
    if (to_string(b) == s) return b;
  }
  throw Error(ErrorKind::MalformedRow, "unknown mape_band '" + s + "'");
}

RmspeBand rmspe_band_from(const std::string& s) {
  for (RmspeBand b : {RmspeBand::Acceptable, RmspeBand::RecalibrationRequired}) {
    if (to_string(b) == s) return b;
  }
  throw Error(ErrorKind::MalformedRow, "unknown rmspe_band '" + s + "'");
}

}  // namespace

nlohmann::ordered_json report_to_json(const PipelineResult& result, const RunConfig& config) {
  const EvaluationReport& r = result.report;
  nlohmann::ordered_json j;
  j["schema"] = kReportSchemaVersion;
  j["mape_percent"] = r.mape_percent;
  j["rmspe_percent"] = r.rmspe_percent;
  j["pearson_r"] = r.pearson_r;
  j["r_squared"] = r.r_squared;
  j["trend_slope"] = r.trend_slope;
  j["mape_band"] = to_string(r.mape_band);
  j["rmspe_band"] = to_string(r.rmspe_band);
  j["observed_stats"] = stats_json(r.observed_stats);
  j["predicted_stats"] = stats_json(r.predicted_stats);
  nlohmann::ordered_json params;
  params["m_t"] = result.params.filter.transition;
  params["m_m"] = result.params.filter.measurement;
  params["q"] = result.params.filter.process_noise_var;
  params["r"] = result.params.filter.measurement_noise_var;
  params["p0"] = result.params.p0;
  j["params"] = std::move(params);
  j["noise_estimated"] = result.params.noise_estimated;
  j["evaluate_mode"] = to_string(config.evaluate_mode);
  j["percent_denominator"] = to_string(config.percent_denominator);
  j["bin_duration"] = result.series.bin_duration;
  j["next_forecasts"] = result.next_forecasts;
  return j;
}

std::string report_to_string(const PipelineResult& result, const RunConfig& config) {
  return report_to_json(result, config).dump(2) + "\n";
}

EvaluationReport report_from_json(const nlohmann::json& doc) {
  try {
    if (doc.at("schema").get<int>() != kReportSchemaVersion) {
      throw Error(ErrorKind::MalformedRow, "unsupported report schema");
    }
    EvaluationReport r;
    r.mape_percent = doc.at("mape_percent").get<double>();
    r.rmspe_percent = doc.at("rmspe_percent").get<double>();
    r.pearson_r = doc.at("pearson_r").get<double>();
    r.r_squared = doc.at("r_squared").get<double>();
    r.trend_slope = doc.at("trend_slope").get<double>();
    r.mape_band = mape_band_from(doc.at("mape_band").get<std::string>());
    r.rmspe_band = rmspe_band_from(doc.at("rmspe_band").get<std::string>());
    r.observed_stats = stats_from(doc.at("observed_stats"));
    r.predicted_stats = stats_from(doc.at("predicted_stats"));
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::MalformedRow, std::string("report: ") + e.what());
  }
}

void write_report(const PipelineResult& result, const RunConfig& config, const std::filesystem::path& json_path,
                  const std::filesystem::path& trace_csv_path) {
  write_file_atomic(json_path, report_to_string(result, config));
  write_file_atomic(trace_csv_path, trace_to_csv(result.series, result.trace, result.params.filter));
}

}  // namespace flowcast
