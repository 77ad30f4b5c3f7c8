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

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>

namespace flowcast {

/// Vehicle classes of the RHD-2005 PCU guideline. The order is stable and is
/// used for array indexing and CSV output.
enum class VehicleClass : std::uint8_t {
  Bus,
  Truck,
  Cng,
  PrivateCar,
  CommercialVehicle,
  Utility,
  Motorcycle,
  Bicycle,
  CycleRickshaw,
};

inline constexpr std::size_t kVehicleClassCount = 9;

inline constexpr std::array<VehicleClass, kVehicleClassCount> kAllVehicleClasses = {
    VehicleClass::Bus,        VehicleClass::Truck,   VehicleClass::Cng,
    VehicleClass::PrivateCar, VehicleClass::CommercialVehicle,
    VehicleClass::Utility,    VehicleClass::Motorcycle,
    VehicleClass::Bicycle,    VehicleClass::CycleRickshaw,
};

constexpr std::size_t index_of(VehicleClass c) noexcept { return static_cast<std::size_t>(c); }

/// Label written to CSV files ("Bus", "PrivateCar", "CycleRickshaw", ...).
std::string_view canonical_label(VehicleClass c) noexcept;

/// Case-insensitive; spaces, '_' and '-' are ignored. Accepts the canonical
/// labels plus the aliases "car", "rickshaw" and "cng".
/// Throws Error(UnknownVehicleClass) with the offending label.
VehicleClass parse_vehicle_class(std::string_view label);

/// Per-vehicle-class PCU factors. Immutable once built; every factor is
/// finite and strictly positive.
class PcuTable {
 public:
  using Factors = std::array<double, kVehicleClassCount>;

  /// RHD-2005 defaults.
  PcuTable() noexcept;
  /// Throws Error(InvalidParams) if any factor is not finite and > 0.
  explicit PcuTable(const Factors& factors);

  [[nodiscard]] double factor(VehicleClass c) const noexcept { return factors_[index_of(c)]; }
  [[nodiscard]] const Factors& factors() const noexcept { return factors_; }

  /// Copy with one factor replaced (validated).
  [[nodiscard]] PcuTable with_factor(VehicleClass c, double value) const;

  [[nodiscard]] double max_factor() const noexcept;

  friend bool operator==(const PcuTable&, const PcuTable&) = default;

 private:
  Factors factors_;
};

inline double pcu_factor(const PcuTable& table, VehicleClass c) noexcept { return table.factor(c); }

/// Vehicle counts indexed by VehicleClass.
using ClassCounts = std::array<std::int64_t, kVehicleClassCount>;

/// Sum of count x factor over all classes. Throws Error(NegativeCount).
double to_pcu(const PcuTable& table, const ClassCounts& counts);

struct ClassifiedCount {
  std::int64_t timestamp = 0;  // epoch seconds
  VehicleClass vehicle_class = VehicleClass::PrivateCar;
  std::int64_t count = 0;

  friend bool operator==(const ClassifiedCount&, const ClassifiedCount&) = default;
};

}  // namespace flowcast
