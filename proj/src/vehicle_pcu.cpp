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

#include "flowcast/vehicle_pcu.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "flowcast/error.hpp"

namespace flowcast {

namespace {

constexpr std::array<std::string_view, kVehicleClassCount> kLabels = {
    "Bus",     "Truck",      "CNG",     "PrivateCar",   "CommercialVehicle",
    "Utility", "Motorcycle", "Bicycle", "CycleRickshaw",
};

// RHD Geometric Design Standards Manual (2005).
constexpr PcuTable::Factors kRhd2005 = {3.0, 3.0, 0.75, 1.0, 1.0, 1.0, 0.75, 0.5, 2.0};

std::string normalize(std::string_view label) {
  std::string out;
  out.reserve(label.size());
  for (char ch : label) {
    if (ch == ' ' || ch == '_' || ch == '-' || ch == '\t') continue;
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  }
  return out;
}

}  // namespace

std::string_view canonical_label(VehicleClass c) noexcept { return kLabels[index_of(c)]; }

VehicleClass parse_vehicle_class(std::string_view label) {
  const std::string key = normalize(label);
  for (VehicleClass c : kAllVehicleClasses) {
    if (key == normalize(canonical_label(c))) return c;
  }
  if (key == "car") return VehicleClass::PrivateCar;
  if (key == "rickshaw") return VehicleClass::CycleRickshaw;
  throw Error(ErrorKind::UnknownVehicleClass, "'" + std::string(label) + "'");
}

PcuTable::PcuTable() noexcept : factors_(kRhd2005) {}

PcuTable::PcuTable(const Factors& factors) : factors_(factors) {
  for (VehicleClass c : kAllVehicleClasses) {
    const double f = factors_[index_of(c)];
    if (!std::isfinite(f) || f <= 0.0) {
      throw Error(ErrorKind::InvalidParams,
                  "PCU factor for " + std::string(canonical_label(c)) + " must be finite and > 0");
    }
  }
}

PcuTable PcuTable::with_factor(VehicleClass c, double value) const {
  Factors f = factors_;
  f[index_of(c)] = value;
  return PcuTable(f);
}

double PcuTable::max_factor() const noexcept {
  return *std::max_element(factors_.begin(), factors_.end());
}

double to_pcu(const PcuTable& table, const ClassCounts& counts) {
  double total = 0.0;
  for (VehicleClass c : kAllVehicleClasses) {
    const std::int64_t n = counts[index_of(c)];
    if (n < 0) {
      throw Error(ErrorKind::NegativeCount,
                  std::string(canonical_label(c)) + " count " + std::to_string(n));
    }
    total += static_cast<double>(n) * table.factor(c);
  }
  return total;
}

}  // namespace flowcast
