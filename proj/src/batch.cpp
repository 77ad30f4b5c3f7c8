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

#include "flowcast/batch.hpp"

#include <exception>
#include <string>

#include "flowcast/error.hpp"

namespace flowcast {

namespace {

void rethrow_first(const std::vector<std::exception_ptr>& errors) {
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

void require_pairs(std::size_t a, std::size_t b) {
  if (a != b) {
    throw Error(ErrorKind::LengthMismatch, std::to_string(a) + " forecasts for " + std::to_string(b) + " observations");
  }
}

AccuracyScore score(const std::vector<double>& f, const std::vector<double>& o, PercentDenominator d) {
  return {mape(f, o, d), rmspe(f, o, d)};
}

}  // namespace

std::vector<FilterTrace> filter_batch(std::span<const std::vector<double>> series, const FilterParams& params,
                                      double p0) {
  params.validate();
  const auto n = static_cast<std::ptrdiff_t>(series.size());
  std::vector<FilterTrace> out(series.size());
  std::vector<std::exception_ptr> errors(series.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      out[i] = filter_series(series[i], params, p0);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  rethrow_first(errors);
  return out;
}

std::vector<FilterTrace> filter_batch_serial(std::span<const std::vector<double>> series,
                                             const FilterParams& params, double p0) {
  params.validate();
  std::vector<FilterTrace> out;
  out.reserve(series.size());
  for (const std::vector<double>& s : series) out.push_back(filter_series(s, params, p0));
  return out;
}

std::vector<AccuracyScore> accuracy_batch(std::span<const std::vector<double>> forecast,
                                          std::span<const std::vector<double>> observed, PercentDenominator d) {
  require_pairs(forecast.size(), observed.size());
  const auto n = static_cast<std::ptrdiff_t>(forecast.size());
  std::vector<AccuracyScore> out(forecast.size());
  std::vector<std::exception_ptr> errors(forecast.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      out[i] = score(forecast[i], observed[i], d);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  rethrow_first(errors);
  return out;
}

std::vector<AccuracyScore> accuracy_batch_serial(std::span<const std::vector<double>> forecast,
                                                 std::span<const std::vector<double>> observed,
                                                 PercentDenominator d) {
  require_pairs(forecast.size(), observed.size());
  std::vector<AccuracyScore> out;
  out.reserve(forecast.size());
  for (std::size_t i = 0; i < forecast.size(); ++i) out.push_back(score(forecast[i], observed[i], d));
  return out;
}

std::vector<double> forecasts_of(const FilterTrace& trace) {
  std::vector<double> out;
  out.reserve(trace.steps.size());
  for (const FilterStep& s : trace.steps) out.push_back(s.forecast);
  return out;
}

}  // namespace flowcast
