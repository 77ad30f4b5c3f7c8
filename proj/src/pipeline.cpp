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

#include "flowcast/pipeline.hpp"

#include <string>

#include "flowcast/error.hpp"

namespace flowcast {

ModelParams resolve_params(const FlowSeries& series, const RunConfig& config) {
  ModelParams out;
  out.p0 = config.p0;
  out.filter.transition = config.m_t;
  out.filter.measurement = config.m_m;
  if (config.q && config.r) {
    out.filter.process_noise_var = *config.q;
    out.filter.measurement_noise_var = *config.r;
  } else {
    const NoiseEstimate est = estimate_noise(series);
    out.filter.process_noise_var = config.q.value_or(est.process_noise_var);
    out.filter.measurement_noise_var = config.r.value_or(est.measurement_noise_var);
    out.noise_estimated = true;
  }
  out.filter.validate();
  return out;
}

PipelineResult run_pipeline(const FlowSeries& series, const RunConfig& config) {
  if (const auto issues = validate_series(series); !issues.empty()) {
    throw Error(ErrorKind::InvalidParams, "series fails validation (" + std::to_string(issues.size()) + " issues)");
  }
  PipelineResult res;
  res.series = series;
  res.params = resolve_params(series, config);
  res.trace = filter_series(series, res.params.filter, res.params.p0);

  res.observed.assign(series.values.begin() + 1, series.values.end());
  res.predicted.reserve(res.trace.steps.size());
  for (const FilterStep& s : res.trace.steps) {
    res.predicted.push_back(config.evaluate_mode == EvaluateMode::Predicted
                                ? s.forecast
                                : res.params.filter.measurement * s.posterior.estimate);
  }
  res.report = evaluate(res.predicted, res.observed, series.values, config.percent_denominator);
  res.next_forecasts = forecast_next(res.trace.steps.back().posterior, res.params.filter, config.horizon);
  return res;
}

}  // namespace flowcast
