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

#include <vector>

#include "flowcast/config.hpp"
#include "flowcast/evaluation.hpp"
#include "flowcast/flow_series.hpp"
#include "flowcast/kalman.hpp"

namespace flowcast {

/// Resolved model parameters for one run.
struct ModelParams {
  FilterParams filter;
  double p0 = kDefaultInitialVariance;
  bool noise_estimated = false;
};

/// Filter parameters from the config; q and r not set there come from
/// estimate_noise(series).
ModelParams resolve_params(const FlowSeries& series, const RunConfig& config);

struct PipelineResult {
  FlowSeries series;
  ModelParams params;
  FilterTrace trace;
  std::vector<double> observed;   // series.values[1..]
  std::vector<double> predicted;  // forecasts or filtered values, aligned with observed
  EvaluationReport report;
  std::vector<double> next_forecasts;  // config.horizon steps past the last bin
};

/// Filters `series`, scores the chosen prediction against the observations
/// and extrapolates past the end. Bin 0 only seeds the filter.
PipelineResult run_pipeline(const FlowSeries& series, const RunConfig& config);

}  // namespace flowcast
