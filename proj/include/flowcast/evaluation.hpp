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
#include <string_view>
#include <utility>
#include <vector>

namespace flowcast {

/// Which value divides the error in MAPE/RMSPE. `Forecast` is x' in
/// |x' - x| / |x'|, the default.
enum class PercentDenominator { Forecast, Observed };

/// Mean absolute percent error, in percent.
/// Errors: LengthMismatch (also for empty input), ZeroDenominator(index).
double mape(std::span<const double> forecast, std::span<const double> observed,
            PercentDenominator denominator = PercentDenominator::Forecast);

/// Root mean square percent error, in percent. Same contract as mape().
double rmspe(std::span<const double> forecast, std::span<const double> observed,
             PercentDenominator denominator = PercentDenominator::Forecast);

/// Sample Pearson correlation. Errors: LengthMismatch, SeriesTooShort,
/// ZeroVariance.
double pearson(std::span<const double> a, std::span<const double> b);

/// Squared Pearson correlation.
double r_squared(std::span<const double> a, std::span<const double> b);

struct DescriptiveStats {
  std::size_t count = 0;
  double mean = 0.0;
  double std_dev = 0.0;  // n - 1 denominator, 0 for a single value
  double variance = 0.0;
  double min = 0.0;
  double max = 0.0;
  double median = 0.0;
  double q1 = 0.0;
  double q3 = 0.0;
};

/// Quantile of sorted data by linear interpolation between closest ranks
/// (position p * (n - 1)).
double quantile_sorted(std::span<const double> sorted, double p);

/// Throws Error(EmptyInput).
DescriptiveStats descriptive(std::span<const double> values);

enum class MapeBand { HighAccuracy, Good, Decent, Bad };
enum class RmspeBand { Acceptable, RecalibrationRequired };

/// <10 HighAccuracy, [10,20) Good, [20,50) Decent, >=50 Bad.
/// Throws NegativeMetric for negative or NaN input.
MapeBand mape_band(double mape_percent);
/// <=25 Acceptable, >25 RecalibrationRequired.
RmspeBand rmspe_band(double rmspe_percent);

std::string_view to_string(MapeBand band) noexcept;
std::string_view to_string(RmspeBand band) noexcept;

/// OLS slope of value against index, units per bin. Throws SeriesTooShort.
double trend_slope(std::span<const double> values);

/// OLS intercept at index 0 (companion of trend_slope for plotting).
double trend_intercept(std::span<const double> values);

struct HistogramBin {
  double lower_edge = 0.0;
  std::size_t count = 0;

  friend bool operator==(const HistogramBin&, const HistogramBin&) = default;
};

/// Equal-width bins over [min, max]; max lands in the last bin. A zero-width
/// range collapses to one bin holding every value.
/// Errors: EmptyInput, InvalidParams (bin_count == 0).
std::vector<HistogramBin> histogram(std::span<const double> values, std::size_t bin_count);

struct EvaluationReport {
  double mape_percent = 0.0;
  double rmspe_percent = 0.0;
  double pearson_r = 0.0;
  double r_squared = 0.0;
  double trend_slope = 0.0;
  MapeBand mape_band = MapeBand::HighAccuracy;
  RmspeBand rmspe_band = RmspeBand::Acceptable;
  DescriptiveStats observed_stats;
  DescriptiveStats predicted_stats;
};

/// Scores `predicted` against `observed` (same length, aligned).
/// `trend_source` is the series whose OLS slope is reported; pass the full
/// observed flow series.
EvaluationReport evaluate(std::span<const double> predicted, std::span<const double> observed,
                          std::span<const double> trend_source,
                          PercentDenominator denominator = PercentDenominator::Forecast);

}  // namespace flowcast
