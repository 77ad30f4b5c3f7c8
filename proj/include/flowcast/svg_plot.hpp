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
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "flowcast/evaluation.hpp"

namespace flowcast {

struct PlotInput {
  std::span<const double> observed;
  std::span<const double> predicted;  // aligned with observed
  std::size_t first_bin = 0;          // bin index of observed[0], for axis labels
  std::size_t histogram_bins = 8;
};

struct PlotSet {
  std::string observed_histogram;
  std::string predicted_histogram;
  std::string boxplot;
  std::string scatter;
  std::string timeseries;
};

/// Renders the five SVG figures as text. Deterministic; degenerate ranges
/// (constant series) are padded rather than rejected.
/// Throws LengthMismatch for unequal or empty inputs.
PlotSet render_plot_set(const PlotInput& input, const EvaluationReport& report);

/// Writes the figures into `out_dir` (created if missing) as
/// histogram_observed.svg, histogram_predicted.svg, boxplot.svg,
/// scatter.svg and timeseries.svg. Returns the written paths in that order.
std::vector<std::filesystem::path> render_plots(const PlotInput& input, const EvaluationReport& report,
                                                const std::filesystem::path& out_dir);

}  // namespace flowcast
