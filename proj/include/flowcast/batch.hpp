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

#include <span>
#include <vector>

#include "flowcast/evaluation.hpp"
#include "flowcast/kalman.hpp"

// Batch kernels over many independent series (e.g. one per detector or per
// road section). Each series is filtered sequentially; the parallelism is
// across series, so the OpenMP and serial paths produce bit-identical
// results. The *_serial versions are the reference the tests compare against.

namespace flowcast {

/// Filters every series with the same parameters. An error in any series is
/// rethrown after the loop (lowest failing index wins).
std::vector<FilterTrace> filter_batch(std::span<const std::vector<double>> series, const FilterParams& params,
                                      double p0 = kDefaultInitialVariance);
std::vector<FilterTrace> filter_batch_serial(std::span<const std::vector<double>> series,
                                             const FilterParams& params, double p0 = kDefaultInitialVariance);

struct AccuracyScore {
  double mape_percent = 0.0;
  double rmspe_percent = 0.0;
};

/// MAPE/RMSPE for forecast[i] against observed[i].
std::vector<AccuracyScore> accuracy_batch(std::span<const std::vector<double>> forecast,
                                          std::span<const std::vector<double>> observed,
                                          PercentDenominator denominator = PercentDenominator::Forecast);
std::vector<AccuracyScore> accuracy_batch_serial(std::span<const std::vector<double>> forecast,
                                                 std::span<const std::vector<double>> observed,
                                                 PercentDenominator denominator = PercentDenominator::Forecast);

/// One-step-ahead forecasts of a trace (steps[i].forecast).
std::vector<double> forecasts_of(const FilterTrace& trace);

}  // namespace flowcast
