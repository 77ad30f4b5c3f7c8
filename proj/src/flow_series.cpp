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

#include "flowcast/flow_series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "flowcast/error.hpp"

namespace flowcast {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

FlowSeries aggregate(std::span<const ClassifiedCount> records, const PcuTable& table,
                     std::int64_t bin_duration, std::optional<std::int64_t> start_time) {
  if (records.empty()) throw Error(ErrorKind::EmptyInput, "no count records");
  if (bin_duration <= 0) {
    throw Error(ErrorKind::InvalidParams, "bin_duration must be > 0, got " + std::to_string(bin_duration));
  }

  auto [lo, hi] = std::minmax_element(records.begin(), records.end(), [](const auto& a, const auto& b) {
    return a.timestamp < b.timestamp;
  });
  const std::int64_t start = start_time.value_or(floor_div(lo->timestamp, bin_duration) * bin_duration);
  if (lo->timestamp < start) {
    throw Error(ErrorKind::RecordBeforeStart, "timestamp " + std::to_string(lo->timestamp) +
                                                  " precedes start " + std::to_string(start));
  }

  // Unsigned difference: exact for any hi >= start, even across the full int64 range.
  const std::uint64_t span = static_cast<std::uint64_t>(hi->timestamp) - static_cast<std::uint64_t>(start);
  const std::uint64_t bin_count = span / static_cast<std::uint64_t>(bin_duration) + 1;
  if (bin_count > kMaxBins) {
    throw Error(ErrorKind::InvalidParams, "records span " + std::to_string(bin_count) + " bins, limit is " +
                                              std::to_string(kMaxBins));
  }
  const auto bins = static_cast<std::size_t>(bin_count);
  // Per-bin class counts first so each bin's PCU is one to_pcu evaluation,
  // independent of record order.
  std::vector<ClassCounts> per_bin(bins, ClassCounts{});
  for (const ClassifiedCount& r : records) {
    if (r.count < 0) {
      throw Error(ErrorKind::NegativeCount, "record at " + std::to_string(r.timestamp) + " has count " +
                                                std::to_string(r.count));
    }
    const auto bin = static_cast<std::size_t>(
        (static_cast<std::uint64_t>(r.timestamp) - static_cast<std::uint64_t>(start)) /
        static_cast<std::uint64_t>(bin_duration));
    per_bin[bin][index_of(r.vehicle_class)] += r.count;
  }

  FlowSeries out{start, bin_duration, {}};
  out.values.reserve(bins);
  for (const ClassCounts& counts : per_bin) out.values.push_back(to_pcu(table, counts));
  return out;
}

std::vector<SeriesIssue> validate_series(const FlowSeries& series) {
  std::vector<SeriesIssue> issues;
  if (series.bin_duration <= 0) issues.push_back({SeriesIssueKind::NonPositiveBinDuration, 0});
  if (series.values.empty()) issues.push_back({SeriesIssueKind::ZeroLength, 0});
  for (std::size_t i = 0; i < series.values.size(); ++i) {
    const double v = series.values[i];
    if (!std::isfinite(v)) {
      issues.push_back({SeriesIssueKind::NonFiniteValue, i});
    } else if (v < 0.0) {
      issues.push_back({SeriesIssueKind::NegativeValue, i});
    }
  }
  return issues;
}

}  // namespace flowcast
