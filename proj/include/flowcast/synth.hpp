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
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "flowcast/vehicle_pcu.hpp"

namespace flowcast {

/// Generator algorithm version. Bump whenever the output for a given
/// Scenario would change.
inline constexpr int kGeneratorVersion = 1;

/// Deterministic source of uniforms and standard normals.
///
/// v1: std::mt19937_64 (sequence fixed by the C++ standard); uniforms from
/// the top 53 bits of each draw mapped to (0, 1]; normals by the Box-Muller
/// cosine branch, one normal per pair of uniforms. Library distributions are
/// avoided because their output is implementation-defined.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  double uniform();
  double normal();

 private:
  std::mt19937_64 engine_;
};

using ClassMix = std::array<double, kVehicleClassCount>;

/// Illustrative rickshaw-heavy mix (vehicle shares, sums to 1).
ClassMix default_class_mix() noexcept;

struct Scenario {
  std::int64_t start_time = 1611129600;
  std::int64_t duration = 10800;
  std::int64_t bin_duration = 300;
  double base_flow = 480.0;  // PCU per bin at bin 0
  double trend = 6.0;        // PCU per bin added each bin
  double noise_cv = 0.15;    // stationary SD of the multiplicative noise
  double noise_persistence = 0.8;  // AR(1) coefficient of the noise, [0, 1)
  ClassMix class_mix = default_class_mix();
  std::uint64_t seed = 1;

  /// Throws Error(InvalidScenario) naming the first violated field.
  void validate() const;
  [[nodiscard]] std::size_t bin_count() const;
};

/// Per-bin PCU targets before integer apportionment.
std::vector<double> target_flows(const Scenario& scenario);

/// Splits `target_pcu` into integer class counts: the ideal vehicle total is
/// target / sum(mix * factor); ideal counts are floored and classes are then
/// visited by descending remainder, each gaining one vehicle while the PCU
/// still owed is at least half its factor. The realized PCU is within
/// max_factor / 2 of the target.
ClassCounts apportion(double target_pcu, const ClassMix& mix, const PcuTable& table);

/// One record per class per bin (zero counts included), stamped at the bin
/// start, in class order within each bin.
std::vector<ClassifiedCount> generate(const Scenario& scenario, const PcuTable& table = PcuTable{});

struct NamedScenario {
  std::string name;
  Scenario scenario;
};

/// `paper-like`, `steady` and `volatile`, all with fixed seeds.
std::vector<NamedScenario> presets();

/// Throws Error(UnknownPreset).
Scenario preset(std::string_view name);

}  // namespace flowcast
