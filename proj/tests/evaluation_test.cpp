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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "flowcast/error.hpp"
#include "flowcast/evaluation.hpp"
#include "oracles.hpp"

namespace {

using flowcast::ErrorKind;
using flowcast::MapeBand;
using flowcast::RmspeBand;
using V = std::vector<double>;

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const flowcast::Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::IoError;
}

TEST(Mape, Examples) {
  EXPECT_EQ(flowcast::mape(V{100, 200}, V{100, 200}), 0.0);
  EXPECT_DOUBLE_EQ(flowcast::mape(V{100}, V{90}), 10.0);
  EXPECT_DOUBLE_EQ(flowcast::mape(V{100, 100}, V{90, 120}), 15.0);
  // Observed denominator: |100-90|/90.
  EXPECT_DOUBLE_EQ(flowcast::mape(V{100}, V{90}, flowcast::PercentDenominator::Observed), 100.0 / 9.0);
}

TEST(Mape, Errors) {
  EXPECT_EQ(kind_of([] { flowcast::mape(V{1, 2}, V{1}); }), ErrorKind::LengthMismatch);
  EXPECT_EQ(kind_of([] { flowcast::mape(V{}, V{}); }), ErrorKind::LengthMismatch);
  try {
    flowcast::mape(V{1, 0}, V{1, 1});
    FAIL();
  } catch (const flowcast::Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroDenominator);
    EXPECT_NE(std::string(e.what()).find("index 1"), std::string::npos);
  }
}

TEST(Rmspe, Examples) {
  EXPECT_EQ(flowcast::rmspe(V{100, 200}, V{100, 200}), 0.0);
  EXPECT_DOUBLE_EQ(flowcast::rmspe(V{100}, V{90}), 10.0);
  EXPECT_NEAR(flowcast::rmspe(V{100, 100}, V{90, 120}), 15.811388300841896, 1e-12);
  EXPECT_EQ(kind_of([] { flowcast::rmspe(V{0}, V{1}); }), ErrorKind::ZeroDenominator);
}

TEST(Metrics, OracleAgreementAndPowerMean) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> scale(0.01, 100.0);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 50;
    const V f = flowcast::oracle::random_series(rng, n, 10, 1000);
    const V o = flowcast::oracle::random_series(rng, n, 10, 1000);
    const double m = flowcast::mape(f, o);
    const double r = flowcast::rmspe(f, o);
    EXPECT_LT(flowcast::oracle::rel_err(m, flowcast::oracle::mape(f, o)), 1e-12);
    EXPECT_LT(flowcast::oracle::rel_err(r, flowcast::oracle::rmspe(f, o)), 1e-12);
    EXPECT_GE(r, m * (1 - 1e-15));
    const double c = scale(rng);
    V fc = f, oc = o;
    for (double& x : fc) x *= c;
    for (double& x : oc) x *= c;
    EXPECT_LT(flowcast::oracle::rel_err(flowcast::mape(fc, oc), m), 1e-12);
    EXPECT_LT(flowcast::oracle::rel_err(flowcast::rmspe(fc, oc), r), 1e-12);
  }
}

TEST(Pearson, Examples) {
  EXPECT_DOUBLE_EQ(flowcast::pearson(V{1, 2, 3}, V{1, 2, 3}), 1.0);
  EXPECT_DOUBLE_EQ(flowcast::pearson(V{1, 2, 3}, V{3, 2, 1}), -1.0);
  // Raw-sums oracle; also matches numpy.corrcoef = 0.9647638212377321.
  const double want = flowcast::oracle::pearson(V{1, 2, 3, 4}, V{2, 4, 5, 9});
  EXPECT_NEAR(want, 0.9647638212377321, 1e-14);
  EXPECT_NEAR(flowcast::pearson(V{1, 2, 3, 4}, V{2, 4, 5, 9}), want, 1e-14);
}

TEST(Pearson, Errors) {
  EXPECT_EQ(kind_of([] { flowcast::pearson(V{1, 2}, V{1}); }), ErrorKind::LengthMismatch);
  EXPECT_EQ(kind_of([] { flowcast::pearson(V{1}, V{1}); }), ErrorKind::SeriesTooShort);
  EXPECT_EQ(kind_of([] { flowcast::pearson(V{1, 1, 1}, V{1, 2, 3}); }), ErrorKind::ZeroVariance);
}

TEST(RSquared, ExamplesAndAffineInvariance) {
  EXPECT_DOUBLE_EQ(flowcast::r_squared(V{1, 2, 3}, V{1, 2, 3}), 1.0);
  EXPECT_DOUBLE_EQ(flowcast::r_squared(V{1, 2, 3}, V{3, 2, 1}), 1.0);
  EXPECT_NEAR(0.937 * 0.937, 0.878, 0.001);

  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const V a = flowcast::oracle::random_series(rng, 3 + rng() % 30, 0, 100);
    const V b = flowcast::oracle::random_series(rng, a.size(), 0, 100);
    const double r = flowcast::pearson(a, b);
    EXPECT_GE(r, -1.0);
    EXPECT_LE(r, 1.0);
    EXPECT_EQ(flowcast::r_squared(a, b), r * r);
    V mapped = a;
    for (double& x : mapped) x = -3.5 * x + 40.0;
    EXPECT_NEAR(flowcast::r_squared(mapped, b), r * r, 1e-12);
  }
}

TEST(Descriptive, Examples) {
  const auto one = flowcast::descriptive(V{5});
  EXPECT_EQ(one.mean, 5);
  EXPECT_EQ(one.std_dev, 0);
  EXPECT_EQ(one.median, 5);
  EXPECT_EQ(one.min, 5);
  EXPECT_EQ(one.max, 5);

  const auto four = flowcast::descriptive(V{1, 2, 3, 4});
  EXPECT_DOUBLE_EQ(four.mean, 2.5);
  EXPECT_DOUBLE_EQ(four.median, 2.5);
  EXPECT_NEAR(four.std_dev, std::sqrt(5.0 / 3.0), 1e-15);
  EXPECT_NEAR(four.std_dev, 1.2910, 1e-4);
  EXPECT_DOUBLE_EQ(four.q1, 1.75);
  EXPECT_DOUBLE_EQ(four.q3, 3.25);

  const auto range = flowcast::descriptive(V{225, 927});
  EXPECT_EQ(range.min, 225);
  EXPECT_EQ(range.max, 927);
  EXPECT_EQ(kind_of([] { flowcast::descriptive(V{}); }), ErrorKind::EmptyInput);
}

TEST(Descriptive, ShiftAndPermutation) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    V v = flowcast::oracle::random_series(rng, 1 + rng() % 40, 0, 1000);
    const auto s = flowcast::descriptive(v);
    EXPECT_LE(s.min, s.q1);
    EXPECT_LE(s.q1, s.median);
    EXPECT_LE(s.median, s.q3);
    EXPECT_LE(s.q3, s.max);
    V shuffled = v;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    EXPECT_NEAR(flowcast::descriptive(shuffled).mean, s.mean, 1e-12 * s.mean);
    V shifted = v;
    for (double& x : shifted) x += 250.0;
    const auto t = flowcast::descriptive(shifted);
    EXPECT_NEAR(t.mean, s.mean + 250.0, 1e-9);
    EXPECT_NEAR(t.median, s.median + 250.0, 1e-9);
    EXPECT_NEAR(t.min, s.min + 250.0, 1e-9);
    EXPECT_NEAR(t.max, s.max + 250.0, 1e-9);
    EXPECT_NEAR(t.std_dev, s.std_dev, 1e-9);
  }
}

TEST(Bands, Mape) {
  EXPECT_EQ(flowcast::mape_band(14.62), MapeBand::Good);
  EXPECT_EQ(flowcast::mape_band(0), MapeBand::HighAccuracy);
  EXPECT_EQ(flowcast::mape_band(9.999), MapeBand::HighAccuracy);
  EXPECT_EQ(flowcast::mape_band(10), MapeBand::Good);
  EXPECT_EQ(flowcast::mape_band(20), MapeBand::Decent);
  EXPECT_EQ(flowcast::mape_band(50), MapeBand::Bad);
  EXPECT_EQ(kind_of([] { flowcast::mape_band(-0.1); }), ErrorKind::NegativeMetric);
  EXPECT_EQ(kind_of([] { flowcast::mape_band(NAN); }), ErrorKind::NegativeMetric);
}

TEST(Bands, Rmspe) {
  EXPECT_EQ(flowcast::rmspe_band(18.73), RmspeBand::Acceptable);
  EXPECT_EQ(flowcast::rmspe_band(0), RmspeBand::Acceptable);
  EXPECT_EQ(flowcast::rmspe_band(25.0), RmspeBand::Acceptable);
  EXPECT_EQ(flowcast::rmspe_band(25.0001), RmspeBand::RecalibrationRequired);
  EXPECT_EQ(kind_of([] { flowcast::rmspe_band(-1); }), ErrorKind::NegativeMetric);
}

TEST(Bands, Monotone) {
  for (double m = 0; m < 120; m += 0.25) {
    EXPECT_LE(static_cast<int>(flowcast::mape_band(m)), static_cast<int>(flowcast::mape_band(m + 0.25)));
    EXPECT_LE(static_cast<int>(flowcast::rmspe_band(m)), static_cast<int>(flowcast::rmspe_band(m + 0.25)));
  }
}

TEST(TrendSlope, Examples) {
  EXPECT_EQ(flowcast::trend_slope(V{100, 100, 100}), 0.0);
  EXPECT_DOUBLE_EQ(flowcast::trend_slope(V{0, 1, 2, 3}), 1.0);
  EXPECT_NEAR(flowcast::trend_slope(V{1, 3, 2, 4}), flowcast::oracle::ols_slope(V{1, 3, 2, 4}), 1e-14);
  EXPECT_NEAR(flowcast::trend_slope(V{1, 3, 2, 4}), 0.8, 1e-14);
  EXPECT_NEAR(flowcast::trend_intercept(V{1, 3, 2, 4}), 1.3, 1e-14);
  EXPECT_EQ(kind_of([] { flowcast::trend_slope(V{1}); }), ErrorKind::SeriesTooShort);
}

TEST(TrendSlope, ReversalNegates) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    V v = flowcast::oracle::random_series(rng, 2 + rng() % 40, 0, 1000);
    const double s = flowcast::trend_slope(v);
    EXPECT_NEAR(s, flowcast::oracle::ols_slope(v), 1e-9 * std::max(1.0, std::abs(s)));
    std::reverse(v.begin(), v.end());
    EXPECT_NEAR(flowcast::trend_slope(v), -s, 1e-12 * std::max(1.0, std::abs(s)));
  }
}

TEST(Histogram, Examples) {
  using B = flowcast::HistogramBin;
  EXPECT_EQ(flowcast::histogram(V{1, 1, 1}, 1), (std::vector<B>{{1, 3}}));
  EXPECT_EQ(flowcast::histogram(V{0, 1, 2, 3}, 2), (std::vector<B>{{0, 2}, {1.5, 2}}));
  EXPECT_EQ(flowcast::histogram(V{5}, 3), (std::vector<B>{{5, 1}}));
  EXPECT_EQ(kind_of([] { flowcast::histogram(V{}, 3); }), ErrorKind::EmptyInput);
  EXPECT_EQ(kind_of([] { flowcast::histogram(V{1}, 0); }), ErrorKind::InvalidParams);
}

TEST(Histogram, CountsSumToN) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const V v = flowcast::oracle::random_series(rng, 1 + rng() % 100, 0, 1000);
    std::size_t total = 0;
    for (const auto& b : flowcast::histogram(v, 1 + rng() % 12)) total += b.count;
    EXPECT_EQ(total, v.size());
  }
}

TEST(Evaluate, Report) {
  const V observed = {90, 120, 130, 150};
  const V predicted = {100, 100, 140, 145};
  const V trend = {80, 90, 120, 130, 150};
  const auto r = flowcast::evaluate(predicted, observed, trend);
  EXPECT_DOUBLE_EQ(r.mape_percent, flowcast::mape(predicted, observed));
  EXPECT_DOUBLE_EQ(r.rmspe_percent, flowcast::rmspe(predicted, observed));
  EXPECT_EQ(r.r_squared, r.pearson_r * r.pearson_r);
  EXPECT_DOUBLE_EQ(r.trend_slope, flowcast::trend_slope(trend));
  EXPECT_EQ(r.mape_band, flowcast::mape_band(r.mape_percent));
  EXPECT_EQ(r.observed_stats.count, 4u);
  EXPECT_GE(r.rmspe_percent, r.mape_percent);
}

}  // namespace
