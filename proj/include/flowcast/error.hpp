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

#include <stdexcept>
#include <string>
#include <string_view>

namespace flowcast {

enum class ErrorKind {
  NegativeCount,
  UnknownVehicleClass,
  EmptyInput,
  RecordBeforeStart,
  NonFiniteInput,
  DegenerateGain,
  SeriesTooShort,
  ZeroVariance,
  InvalidParams,
  LengthMismatch,
  ZeroDenominator,
  NegativeMetric,
  InvalidScenario,
  UnknownPreset,
  FileNotFound,
  MalformedRow,
  IoError,
  InvalidConfig,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for every domain failure. `kind()` identifies the
/// failure; `what()` carries the human-readable detail (offending label, line
/// number, index, ...).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace flowcast
