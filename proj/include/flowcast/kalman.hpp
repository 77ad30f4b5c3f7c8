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
#include <span>
#include <vector>

#include "flowcast/flow_series.hpp"

namespace flowcast {

/// Scalar linear-Gaussian model.
///
///   state:       x[t+1] = transition * x[t] + w,   w ~ N(0, process_noise_var)
///   measurement: z[t]   = measurement * x[t] + v,   v ~ N(0, measurement_noise_var)
struct FilterParams {
  double transition = 1.0;
  double process_noise_var = 1.0;
  double measurement = 1.0;
  double measurement_noise_var = 1.0;

  /// Throws Error(InvalidParams) unless all fields are finite, both variances
  /// are >= 0 with a positive sum, and measurement != 0.
  void validate() const;

  friend bool operator==(const FilterParams&, const FilterParams&) = default;
};

inline constexpr double kDefaultInitialVariance = 1e6;

struct FilterState {
  double estimate = 0.0;
  double variance = 0.0;

  friend bool operator==(const FilterState&, const FilterState&) = default;
};

struct FilterStep {
  FilterState prior;
  double gain = 0.0;
  double innovation = 0.0;  // measurement - measurement_coef * prior.estimate
  FilterState posterior;
  double forecast = 0.0;  // one-step-ahead predicted measurement
};

/// steps[i] absorbs observation i + 1; observation 0 seeds initial_state.
struct FilterTrace {
  FilterState initial_state;
  std::vector<FilterStep> steps;
};

/// estimate = first_observation / measurement, variance = p0.
/// Throws NonFiniteInput, InvalidParams (p0 < 0 or bad params).
FilterState init_state(double first_observation, const FilterParams& params,
                       double p0 = kDefaultInitialVariance);

/// Time update. Throws NonFiniteInput if the result overflows.
FilterState predict(const FilterState& state, const FilterParams& params);

/// k = p m / (m^2 p + r). Throws DegenerateGain when the denominator is 0.
double gain(const FilterState& prior, const FilterParams& params);

/// Measurement update of `prior` with `measurement`.
FilterStep update(const FilterState& prior, double measurement, const FilterParams& params);

/// Runs predict/update over series.values[1..], seeded from values[0].
/// p0 is the variance before values[0] is seen; the seed state's variance
/// is p0 combined with one reading's measurement noise.
/// Throws SeriesTooShort for fewer than two values.
FilterTrace filter_series(std::span<const double> values, const FilterParams& params,
                          double p0 = kDefaultInitialVariance);
inline FilterTrace filter_series(const FlowSeries& series, const FilterParams& params,
                                 double p0 = kDefaultInitialVariance) {
  return filter_series(std::span<const double>(series.values), params, p0);
}

/// measurement * transition^h * state.estimate for h = 1..horizon.
std::vector<double> forecast_next(const FilterState& state, const FilterParams& params,
                                  std::size_t horizon);

struct NoiseEstimate {
  double process_noise_var = 0.0;
  double measurement_noise_var = 0.0;
  double transition = 1.0;
  bool zero_variance = false;  // constant series, floor values returned
};

inline constexpr double kNoiseVarianceFloor = 1e-9;
inline constexpr double kProcessNoiseRelativeFloor = 1e-6;

/// Method-of-moments noise variances for a random walk observed in noise.
///
/// With d the first differences of the series, the local-level model gives
/// Var(d) = q + 2r and lag-1 autocovariance(d) = -r, so
///   r = clamp(-acov1(d), 0, Var(d) / 2)
///   q = max(Var(d) - 2r, 1e-6 * Var(values)).
/// Sample (n - 1) variances. A constant series returns q = r = 1e-9 with
/// zero_variance set. Throws SeriesTooShort below three values.
NoiseEstimate estimate_noise(std::span<const double> values);
inline NoiseEstimate estimate_noise(const FlowSeries& series) {
  return estimate_noise(std::span<const double>(series.values));
}

}  // namespace flowcast
