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

#include <cstdint>
#include <filesystem>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "flowcast/flow_series.hpp"
#include "flowcast/kalman.hpp"
#include "flowcast/vehicle_pcu.hpp"

namespace flowcast {

/// Shortest decimal text that round-trips to the same double.
std::string format_number(double v);

/// Epoch seconds from either an integer or an ISO-8601 UTC timestamp
/// (`YYYY-MM-DDTHH:MM:SS` with optional `Z` or `+00:00`, `T` or space).
/// Throws Error(MalformedRow) without a line number; callers add context.
std::int64_t parse_timestamp(std::string_view text);

/// Counts CSV with header `timestamp,vehicle_class,count`. LF or CRLF, an
/// optional UTF-8 BOM, blank lines ignored. Row order is preserved.
/// Errors: EmptyInput, MalformedRow(line), UnknownVehicleClass(line).
std::vector<ClassifiedCount> parse_counts_csv(std::istream& in);
/// Adds FileNotFound.
std::vector<ClassifiedCount> read_counts_csv(const std::filesystem::path& path);
std::string counts_to_csv(const std::vector<ClassifiedCount>& records);

/// Series CSV with header `bin_start,pcu`. Bin starts must be evenly spaced
/// and increasing; a single-row file takes `fallback_bin_duration`.
FlowSeries parse_series_csv(std::istream& in, std::int64_t fallback_bin_duration = kDefaultBinDuration);
FlowSeries read_series_csv(const std::filesystem::path& path,
                           std::int64_t fallback_bin_duration = kDefaultBinDuration);
std::string series_to_csv(const FlowSeries& series);

enum class InputKind { Counts, Series };

/// Sniffs the header line. Errors: FileNotFound, EmptyInput, MalformedRow.
InputKind detect_input_kind(const std::filesystem::path& path);

/// Header `bin_start,observed,forecast,filtered,gain,innovation`. Bin 0 is
/// the initialization row: forecast, gain and innovation are empty and
/// filtered is the measurement of the initial state.
std::string trace_to_csv(const FlowSeries& series, const FilterTrace& trace, const FilterParams& params);

/// Writes `content` to a temporary sibling and renames it over `path`.
/// Throws Error(IoError).
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace flowcast
