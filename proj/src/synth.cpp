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

#include "flowcast/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "flowcast/error.hpp"

namespace flowcast {

double SeededRng::uniform() {
  // (0, 1]: never 0 so log() below stays finite.
  return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
}

double SeededRng::normal() {
  const double u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

ClassMix default_class_mix() noexcept {
  // Bus, Truck, CNG, PrivateCar, CommercialVehicle, Utility, Motorcycle,
  // Bicycle, CycleRickshaw
  return {0.04, 0.02, 0.14, 0.18, 0.03, 0.04, 0.12, 0.05, 0.38};
}

void Scenario::validate() const {
  auto fail = [](const std::string& what) { throw Error(ErrorKind::InvalidScenario, what); };
  if (duration <= 0) fail("duration must be > 0");
  if (bin_duration <= 0) fail("bin_duration must be > 0");
  if (!(std::isfinite(base_flow) && base_flow > 0.0)) fail("base_flow must be > 0");
  if (!std::isfinite(trend)) fail("trend must be finite");
  if (!(std::isfinite(noise_cv) && noise_cv >= 0.0)) fail("noise_cv must be >= 0");
  if (!(noise_persistence >= 0.0 && noise_persistence < 1.0)) fail("noise_persistence must be in [0, 1)");
  double sum = 0.0;
  for (double p : class_mix) {
    if (!(std::isfinite(p) && p >= 0.0)) fail("class_mix proportions must be >= 0");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9) fail("class_mix must sum to 1");
}

std::size_t Scenario::bin_count() const {
  return static_cast<std::size_t>((duration + bin_duration - 1) / bin_duration);
}

std::vector<double> target_flows(const Scenario& scenario) {
  scenario.validate();
  SeededRng rng(scenario.seed);
  const double phi = scenario.noise_persistence;
  const double innovation_scale = std::sqrt(1.0 - phi * phi);

  const std::size_t bins = scenario.bin_count();
  std::vector<double> targets(bins);
  double z = rng.normal();  // stationary start
  for (std::size_t i = 0; i < bins; ++i) {
    if (i > 0) z = phi * z + innovation_scale * rng.normal();
    const double level = scenario.base_flow + scenario.trend * static_cast<double>(i);
    targets[i] = std::max(0.0, level * (1.0 + scenario.noise_cv * z));
  }
  return targets;
}

ClassCounts apportion(double target_pcu, const ClassMix& mix, const PcuTable& table) {
  ClassCounts counts{};
  double pcu_per_vehicle = 0.0;
  for (VehicleClass c : kAllVehicleClasses) pcu_per_vehicle += mix[index_of(c)] * table.factor(c);
  if (target_pcu <= 0.0 || pcu_per_vehicle <= 0.0) return counts;

  const double vehicles = target_pcu / pcu_per_vehicle;
  std::array<double, kVehicleClassCount> remainder{};
  double owed = target_pcu;
  for (VehicleClass c : kAllVehicleClasses) {
    const std::size_t k = index_of(c);
    const double ideal = vehicles * mix[k];
    const double whole = std::floor(ideal);
    counts[k] = static_cast<std::int64_t>(whole);
    remainder[k] = ideal - whole;
    owed -= whole * table.factor(c);
  }

  std::array<std::size_t, kVehicleClassCount> order{};
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return remainder[a] > remainder[b]; });
  for (std::size_t k : order) {
    if (mix[k] == 0.0) continue;
    const double f = table.factor(kAllVehicleClasses[k]);
    if (owed >= f / 2.0) {
      ++counts[k];
      owed -= f;
    }
  }
  return counts;
}

std::vector<ClassifiedCount> generate(const Scenario& scenario, const PcuTable& table) {
  const std::vector<double> targets = target_flows(scenario);
  std::vector<ClassifiedCount> records;
  records.reserve(targets.size() * kVehicleClassCount);
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const std::int64_t t = scenario.start_time + static_cast<std::int64_t>(i) * scenario.bin_duration;
    const ClassCounts counts = apportion(targets[i], scenario.class_mix, table);
    for (VehicleClass c : kAllVehicleClasses) records.push_back({t, c, counts[index_of(c)]});
  }
  return records;
}

std::vector<NamedScenario> presets() {
  Scenario paper_like;
  paper_like.trend = 8.0;
  paper_like.noise_cv = 0.08;
  paper_like.seed = 20210120;

  Scenario steady;
  steady.trend = 0.0;
  steady.noise_cv = 0.10;
  steady.seed = 7;

  Scenario volatile_;
  volatile_.noise_cv = 0.35;
  volatile_.seed = 35;

  return {{"paper-like", paper_like}, {"steady", steady}, {"volatile", volatile_}};
}

Scenario preset(std::string_view name) {
  for (const NamedScenario& p : presets()) {
    if (p.name == name) return p.scenario;
  }
  throw Error(ErrorKind::UnknownPreset, "'" + std::string(name) + "'");
}

}  // namespace flowcast
