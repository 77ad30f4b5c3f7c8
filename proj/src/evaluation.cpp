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

#include "flowcast/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "flowcast/error.hpp"

namespace flowcast {

namespace {

void require_same_nonempty(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size() || a.empty()) {
    throw Error(ErrorKind::LengthMismatch,
                "lengths " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
  }
}

double percent_error(double forecast, double observed, PercentDenominator d, std::size_t i) {
  const double denom = d == PercentDenominator::Forecast ? forecast : observed;
  if (denom == 0.0) throw Error(ErrorKind::ZeroDenominator, "zero denominator at index " + std::to_string(i));
  return (forecast - observed) / denom;
}

double mean_of(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

}  // namespace

double mape(std::span<const double> forecast, std::span<const double> observed, PercentDenominator d) {
  require_same_nonempty(forecast, observed);
  double sum = 0.0;
  for (std::size_t i = 0; i < forecast.size(); ++i) sum += std::abs(percent_error(forecast[i], observed[i], d, i));
  return 100.0 * sum / static_cast<double>(forecast.size());
}

double rmspe(std::span<const double> forecast, std::span<const double> observed, PercentDenominator d) {
  require_same_nonempty(forecast, observed);
  double sum = 0.0;
  for (std::size_t i = 0; i < forecast.size(); ++i) {
    const double e = percent_error(forecast[i], observed[i], d, i);
    sum += e * e;
  }
  return 100.0 * std::sqrt(sum / static_cast<double>(forecast.size()));
}

double pearson(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::LengthMismatch,
                "lengths " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
  }
  if (a.size() < 2) throw Error(ErrorKind::SeriesTooShort, "correlation needs at least 2 pairs");
  const double ma = mean_of(a);
  const double mb = mean_of(b);
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double da = a[i] - ma;
    const double db = b[i] - mb;
    sab += da * db;
    saa += da * da;
    sbb += db * db;
  }
  if (saa == 0.0 || sbb == 0.0) throw Error(ErrorKind::ZeroVariance, "correlation of a constant series");
  return std::clamp(sab / std::sqrt(saa * sbb), -1.0, 1.0);
}

double r_squared(std::span<const double> a, std::span<const double> b) {
  const double r = pearson(a, b);
  return r * r;
}

double quantile_sorted(std::span<const double> sorted, double p) {
  const double pos = p * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

DescriptiveStats descriptive(std::span<const double> values) {
  if (values.empty()) throw Error(ErrorKind::EmptyInput, "descriptive statistics of an empty list");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());

  DescriptiveStats s;
  s.count = values.size();
  s.mean = mean_of(values);
  if (s.count > 1) {
    double ss = 0.0;
    for (double x : values) ss += (x - s.mean) * (x - s.mean);
    s.variance = ss / static_cast<double>(s.count - 1);
  }
  s.std_dev = std::sqrt(s.variance);
  s.min = sorted.front();
  s.max = sorted.back();
  s.median = quantile_sorted(sorted, 0.5);
  s.q1 = quantile_sorted(sorted, 0.25);
  s.q3 = quantile_sorted(sorted, 0.75);
  return s;
}

MapeBand mape_band(double mape_percent) {
  if (!(mape_percent >= 0.0)) throw Error(ErrorKind::NegativeMetric, "MAPE " + std::to_string(mape_percent));
  if (mape_percent < 10.0) return MapeBand::HighAccuracy;
  if (mape_percent < 20.0) return MapeBand::Good;
  if (mape_percent < 50.0) return MapeBand::Decent;
  return MapeBand::Bad;
}

RmspeBand rmspe_band(double rmspe_percent) {
  if (!(rmspe_percent >= 0.0)) throw Error(ErrorKind::NegativeMetric, "RMSPE " + std::to_string(rmspe_percent));
  return rmspe_percent <= 25.0 ? RmspeBand::Acceptable : RmspeBand::RecalibrationRequired;
}

std::string_view to_string(MapeBand band) noexcept {
  switch (band) {
    case MapeBand::HighAccuracy: return "high_accuracy";
    case MapeBand::Good: return "good";
    case MapeBand::Decent: return "decent";
    case MapeBand::Bad: return "bad";
  }
  return "";
}

std::string_view to_string(RmspeBand band) noexcept {
  switch (band) {
    case RmspeBand::Acceptable: return "acceptable";
    case RmspeBand::RecalibrationRequired: return "recalibration_required";
  }
  return "";
}

double trend_slope(std::span<const double> values) {
  if (values.size() < 2) throw Error(ErrorKind::SeriesTooShort, "trend needs at least 2 values");
  const double n = static_cast<double>(values.size());
  const double mean_x = (n - 1.0) / 2.0;
  const double mean_y = mean_of(values);
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double dx = static_cast<double>(i) - mean_x;
    sxy += dx * (values[i] - mean_y);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

double trend_intercept(std::span<const double> values) {
  const double slope = trend_slope(values);
  return mean_of(values) - slope * (static_cast<double>(values.size()) - 1.0) / 2.0;
}

std::vector<HistogramBin> histogram(std::span<const double> values, std::size_t bin_count) {
  if (values.empty()) throw Error(ErrorKind::EmptyInput, "histogram of an empty list");
  if (bin_count == 0) throw Error(ErrorKind::InvalidParams, "histogram bin count must be >= 1");
  const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  const double lo = *lo_it;
  const double hi = *hi_it;
  if (hi == lo) return {HistogramBin{lo, values.size()}};

  const double width = (hi - lo) / static_cast<double>(bin_count);
  std::vector<HistogramBin> bins(bin_count);
  for (std::size_t b = 0; b < bin_count; ++b) bins[b].lower_edge = lo + width * static_cast<double>(b);
  for (double v : values) {
    auto b = static_cast<std::size_t>((v - lo) / width);
    bins[std::min(b, bin_count - 1)].count++;
  }
  return bins;
}

EvaluationReport evaluate(std::span<const double> predicted, std::span<const double> observed,
                          std::span<const double> trend_source, PercentDenominator denominator) {
  EvaluationReport r;
  r.mape_percent = mape(predicted, observed, denominator);
  r.rmspe_percent = rmspe(predicted, observed, denominator);
  r.pearson_r = pearson(observed, predicted);
  r.r_squared = r.pearson_r * r.pearson_r;
  r.trend_slope = trend_slope(trend_source);
  r.mape_band = mape_band(r.mape_percent);
  r.rmspe_band = rmspe_band(r.rmspe_percent);
  r.observed_stats = descriptive(observed);
  r.predicted_stats = descriptive(predicted);
  return r;
}

}  // namespace flowcast
