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
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "flowcast/vehicle_pcu.hpp"

namespace flowcast {

inline constexpr std::int64_t kDefaultBinDuration = 300;
/// Upper bound on the bins one aggregation may allocate.
inline constexpr std::uint64_t kMaxBins = 10'000'000;

/// Evenly spaced PCU flow. values[i] covers
/// [start_time + i * bin_duration, start_time + (i + 1) * bin_duration).
struct FlowSeries {
  std::int64_t start_time = 0;
  std::int64_t bin_duration = kDefaultBinDuration;
  std::vector<double> values;

  [[nodiscard]] std::size_t size() const noexcept { return values.size(); }
  [[nodiscard]] std::int64_t bin_start(std::size_t i) const noexcept {
    return start_time + static_cast<std::int64_t>(i) * bin_duration;
  }

  friend bool operator==(const FlowSeries&, const FlowSeries&) = default;
};

/// Bins classified counts into a PCU series.
///
/// The default start is the earliest timestamp floored to a multiple of
/// `bin_duration`. Bins run through the bin holding the latest record; empty
/// interior bins are zero and a trailing partial bin is kept as-is (raw
/// counts, not a rate).
///
/// Errors: EmptyInput, InvalidParams (bin_duration <= 0 or more than
/// kMaxBins bins), NegativeCount,
/// RecordBeforeStart (explicit start after some record).
FlowSeries aggregate(std::span<const ClassifiedCount> records, const PcuTable& table,
                     std::int64_t bin_duration = kDefaultBinDuration,
                     std::optional<std::int64_t> start_time = std::nullopt);

enum class SeriesIssueKind { ZeroLength, NegativeValue, NonFiniteValue, NonPositiveBinDuration };

struct SeriesIssue {
  SeriesIssueKind kind;
  std::size_t index = 0;  // meaningful for value issues only

  friend bool operator==(const SeriesIssue&, const SeriesIssue&) = default;
};

/// Reports every violation; never throws. Empty result means well formed.
std::vector<SeriesIssue> validate_series(const FlowSeries& series);

}  // namespace flowcast
