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

#include "flowcast/error.hpp"

namespace flowcast {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NegativeCount: return "NegativeCount";
    case ErrorKind::UnknownVehicleClass: return "UnknownVehicleClass";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::RecordBeforeStart: return "RecordBeforeStart";
    case ErrorKind::NonFiniteInput: return "NonFiniteInput";
    case ErrorKind::DegenerateGain: return "DegenerateGain";
    case ErrorKind::SeriesTooShort: return "SeriesTooShort";
    case ErrorKind::ZeroVariance: return "ZeroVariance";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::NegativeMetric: return "NegativeMetric";
    case ErrorKind::InvalidScenario: return "InvalidScenario";
    case ErrorKind::UnknownPreset: return "UnknownPreset";
    case ErrorKind::FileNotFound: return "FileNotFound";
    case ErrorKind::MalformedRow: return "MalformedRow";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
  }
  return "Unknown";
}

}  // namespace flowcast
