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

#include "flowcast/kalman.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "flowcast/error.hpp"

namespace flowcast {

namespace {

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw Error(ErrorKind::NonFiniteInput, std::string(what) + " is not finite");
}

double mean_of(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

double sample_variance(std::span<const double> v) {
  const double m = mean_of(v);
  double ss = 0.0;
  for (double x : v) ss += (x - m) * (x - m);
  return ss / static_cast<double>(v.size() - 1);
}

}  // namespace

void FilterParams::validate() const {
  if (!std::isfinite(transition) || !std::isfinite(measurement) || !std::isfinite(process_noise_var) ||
      !std::isfinite(measurement_noise_var)) {
    throw Error(ErrorKind::InvalidParams, "filter parameters must be finite");
  }
  if (process_noise_var < 0.0 || measurement_noise_var < 0.0) {
    throw Error(ErrorKind::InvalidParams, "noise variances must be >= 0");
  }
  if (process_noise_var + measurement_noise_var <= 0.0) {
    throw Error(ErrorKind::InvalidParams, "q + r must be > 0");
  }
  if (measurement == 0.0) throw Error(ErrorKind::InvalidParams, "measurement coefficient must be nonzero");
}

FilterState init_state(double first_observation, const FilterParams& params, double p0) {
  params.validate();
  require_finite(first_observation, "first observation");
  require_finite(p0, "initial variance");
  if (p0 < 0.0) throw Error(ErrorKind::InvalidParams, "initial variance must be >= 0");
  return {first_observation / params.measurement, p0};
}

FilterState predict(const FilterState& state, const FilterParams& params) {
  const double m = params.transition;
  FilterState prior{m * state.estimate, m * m * state.variance + params.process_noise_var};
  require_finite(prior.estimate, "predicted estimate");
  require_finite(prior.variance, "predicted variance");
  return prior;
}

double gain(const FilterState& prior, const FilterParams& params) {
  const double h = params.measurement;
  const double denom = h * h * prior.variance + params.measurement_noise_var;
  if (denom == 0.0) throw Error(ErrorKind::DegenerateGain, "prior variance and measurement noise are both 0");
  return prior.variance * h / denom;
}

FilterStep update(const FilterState& prior, double measurement, const FilterParams& params) {
  require_finite(measurement, "measurement");
  require_finite(prior.estimate, "prior estimate");
  const double h = params.measurement;
  FilterStep step;
  step.prior = prior;
  step.forecast = h * prior.estimate;
  step.gain = gain(prior, params);
  step.innovation = measurement - step.forecast;
  step.posterior.estimate = prior.estimate + step.gain * step.innovation;
  // Clamped: k*h can round a hair above 1.
  step.posterior.variance = std::max(0.0, (1.0 - step.gain * h) * prior.variance);
  return step;
}

FilterTrace filter_series(std::span<const double> values, const FilterParams& params, double p0) {
  if (values.size() < 2) {
    throw Error(ErrorKind::SeriesTooShort, "filtering needs at least 2 values, got " +
                                               std::to_string(values.size()));
  }
  FilterTrace trace;
  trace.initial_state = init_state(values.front(), params, p0);
  // p0 is the spread before the first reading; fold that reading's noise in
  // so it carries the same weight as later ones.
  const double seed_noise = params.measurement_noise_var / (params.measurement * params.measurement);
  const double total = p0 + seed_noise;
  trace.initial_state.variance = total > 0.0 ? p0 * seed_noise / total : 0.0;
  trace.steps.reserve(values.size() - 1);
  FilterState state = trace.initial_state;
  for (std::size_t i = 1; i < values.size(); ++i) {
    FilterStep step = update(predict(state, params), values[i], params);
    state = step.posterior;
    trace.steps.push_back(step);
  }
  return trace;
}

std::vector<double> forecast_next(const FilterState& state, const FilterParams& params, std::size_t horizon) {
  std::vector<double> out;
  out.reserve(horizon);
  double x = state.estimate;
  for (std::size_t h = 0; h < horizon; ++h) {
    x *= params.transition;
    out.push_back(params.measurement * x);
  }
  return out;
}

NoiseEstimate estimate_noise(std::span<const double> values) {
  if (values.size() < 3) {
    throw Error(ErrorKind::SeriesTooShort, "noise estimation needs at least 3 values, got " +
                                               std::to_string(values.size()));
  }
  for (double v : values) require_finite(v, "series value");

  const double value_var = sample_variance(values);
  if (value_var == 0.0) {
    return {kNoiseVarianceFloor, kNoiseVarianceFloor, 1.0, true};
  }

  std::vector<double> diffs(values.size() - 1);
  for (std::size_t i = 0; i + 1 < values.size(); ++i) diffs[i] = values[i + 1] - values[i];
  const double diff_var = sample_variance(diffs);
  const double diff_mean = mean_of(diffs);
  double acov1 = 0.0;
  for (std::size_t i = 1; i < diffs.size(); ++i) acov1 += (diffs[i] - diff_mean) * (diffs[i - 1] - diff_mean);
  acov1 /= static_cast<double>(diffs.size() - 1);

  NoiseEstimate est;
  est.measurement_noise_var = std::clamp(-acov1, 0.0, diff_var / 2.0);
  est.process_noise_var = std::max(diff_var - 2.0 * est.measurement_noise_var,
                                   kProcessNoiseRelativeFloor * value_var);
  est.transition = 1.0;
  return est;
}

}  // namespace flowcast
