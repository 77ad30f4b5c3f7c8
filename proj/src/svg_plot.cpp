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

#include "flowcast/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <string_view>
#include <system_error>

#include <fmt/format.h>

#include "flowcast/csv_io.hpp"
#include "flowcast/error.hpp"

namespace flowcast {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 420.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 20.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 50.0;

constexpr std::string_view kObservedColor = "#1f77b4";
constexpr std::string_view kPredictedColor = "#ff7f0e";

struct Range {
  double lo;
  double hi;
};

Range padded(double lo, double hi) {
  if (hi - lo <= 0.0) {
    const double pad = std::max(1.0, std::abs(lo) * 0.05);
    return {lo - pad, hi + pad};
  }
  const double pad = (hi - lo) * 0.05;
  return {lo - pad, hi + pad};
}

// Maps data coordinates into the plot frame; y grows upward.
class Frame {
 public:
  Frame(Range x, Range y) : x_(x), y_(y) {}

  [[nodiscard]] double px(double x) const {
    return kLeft + (x - x_.lo) / (x_.hi - x_.lo) * (kWidth - kLeft - kRight);
  }
  [[nodiscard]] double py(double y) const {
    return kHeight - kBottom - (y - y_.lo) / (y_.hi - y_.lo) * (kHeight - kTop - kBottom);
  }
  [[nodiscard]] const Range& x() const { return x_; }
  [[nodiscard]] const Range& y() const { return y_; }

 private:
  Range x_;
  Range y_;
};

class Svg {
 public:
  explicit Svg(std::string_view title) {
    out_ = fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:.0f}\" height=\"{:.0f}\" viewBox=\"0 0 {:.0f} {:.0f}\">\n",
        kWidth, kHeight, kWidth, kHeight);
    out_ += fmt::format("<rect x=\"0\" y=\"0\" width=\"{:.0f}\" height=\"{:.0f}\" fill=\"white\"/>\n", kWidth, kHeight);
    text(kWidth / 2, 24, title, "middle", 15);
  }

  void line(double x1, double y1, double x2, double y2, std::string_view stroke, double width = 1.0,
            std::string_view id = {}) {
    out_ += "<line";
    if (!id.empty()) out_ += fmt::format(" id=\"{}\"", id);
    out_ += fmt::format(" x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" stroke=\"{}\" stroke-width=\"{:.1f}\"/>\n",
                        x1, y1, x2, y2, stroke, width);
  }

  void rect(double x, double y, double w, double h, std::string_view fill, std::string_view stroke = "black") {
    out_ += fmt::format(
        "<rect x=\"{:.2f}\" y=\"{:.2f}\" width=\"{:.2f}\" height=\"{:.2f}\" fill=\"{}\" stroke=\"{}\"/>\n", x, y,
        std::max(0.0, w), std::max(0.0, h), fill, stroke);
  }

  void circle(double cx, double cy, double r, std::string_view fill) {
    out_ += fmt::format("<circle cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"{:.1f}\" fill=\"{}\"/>\n", cx, cy, r, fill);
  }

  void polyline(const std::vector<std::pair<double, double>>& pts, std::string_view stroke,
                std::string_view id = {}) {
    out_ += "<polyline";
    if (!id.empty()) out_ += fmt::format(" id=\"{}\"", id);
    out_ += " fill=\"none\" stroke=\"" + std::string(stroke) + "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i) out_ += ' ';
      out_ += fmt::format("{:.2f},{:.2f}", pts[i].first, pts[i].second);
    }
    out_ += "\"/>\n";
  }

  void text(double x, double y, std::string_view s, std::string_view anchor = "start", int size = 11,
            bool rotate = false) {
    out_ += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" font-family=\"sans-serif\" font-size=\"{}\" text-anchor=\"{}\"",
                        x, y, size, anchor);
    if (rotate) out_ += fmt::format(" transform=\"rotate(-90 {:.2f} {:.2f})\"", x, y);
    out_ += ">" + std::string(s) + "</text>\n";
  }

  void axes(const Frame& f, std::string_view x_label, std::string_view y_label, bool x_ticks = true) {
    const double x0 = kLeft, x1 = kWidth - kRight;
    const double y0 = kHeight - kBottom, y1 = kTop;
    line(x0, y0, x1, y0, "black");
    line(x0, y0, x0, y1, "black");
    constexpr int kTicks = 5;
    for (int i = 0; i <= kTicks; ++i) {
      const double t = static_cast<double>(i) / kTicks;
      const double yv = f.y().lo + t * (f.y().hi - f.y().lo);
      const double yp = f.py(yv);
      line(x0 - 4, yp, x0, yp, "black");
      text(x0 - 6, yp + 4, fmt::format("{:.4g}", yv), "end", 10);
      if (x_ticks) {
        const double xv = f.x().lo + t * (f.x().hi - f.x().lo);
        const double xp = f.px(xv);
        line(xp, y0, xp, y0 + 4, "black");
        text(xp, y0 + 16, fmt::format("{:.4g}", xv), "middle", 10);
      }
    }
    text((x0 + x1) / 2, kHeight - 12, x_label, "middle", 12);
    text(18, (y0 + y1) / 2, y_label, "middle", 12, true);
  }

  std::string finish() {
    out_ += "</svg>\n";
    return std::move(out_);
  }

 private:
  std::string out_;
};

std::string histogram_svg(std::span<const double> values, std::size_t bin_count, std::string_view title,
                          std::string_view color) {
  const std::vector<HistogramBin> bins = histogram(values, bin_count);
  const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  const double lo = *lo_it;
  const double hi = *hi_it;
  const bool spread = hi > lo;
  const double width = spread ? (hi - lo) / static_cast<double>(bins.size()) : std::max(1.0, std::abs(lo) * 0.1);
  std::size_t peak = 0;
  for (const HistogramBin& b : bins) peak = std::max(peak, b.count);

  const Range xr = spread ? Range{lo, hi} : Range{lo - width / 2, lo + width / 2};
  const Frame f(xr, {0.0, static_cast<double>(peak) * 1.1});
  Svg svg(title);
  svg.axes(f, "flow (PCU per bin)", "frequency");
  for (const HistogramBin& b : bins) {
    const double left = spread ? b.lower_edge : xr.lo;
    const double x0 = f.px(left);
    const double x1 = f.px(left + width);
    const double top = f.py(static_cast<double>(b.count));
    svg.rect(x0, top, x1 - x0, f.py(0.0) - top, color);
  }
  return svg.finish();
}

std::string boxplot_svg(const EvaluationReport& report) {
  const DescriptiveStats& o = report.observed_stats;
  const DescriptiveStats& p = report.predicted_stats;
  const Frame f({0.0, 2.0}, padded(std::min(o.min, p.min), std::max(o.max, p.max)));
  Svg svg("Observed vs predicted flow");
  svg.axes(f, "", "flow (PCU per bin)", false);
  auto box = [&](const DescriptiveStats& s, double center, std::string_view label, std::string_view color) {
    const double half = (f.px(0.3) - f.px(0.0));
    const double cx = f.px(center);
    svg.line(cx, f.py(s.min), cx, f.py(s.q1), "black");
    svg.line(cx, f.py(s.q3), cx, f.py(s.max), "black");
    svg.line(cx - half / 2, f.py(s.min), cx + half / 2, f.py(s.min), "black");
    svg.line(cx - half / 2, f.py(s.max), cx + half / 2, f.py(s.max), "black");
    svg.rect(cx - half, f.py(s.q3), 2 * half, f.py(s.q1) - f.py(s.q3), color);
    svg.line(cx - half, f.py(s.median), cx + half, f.py(s.median), "black", 2.0);
    svg.text(cx, kHeight - kBottom + 18, label, "middle", 12);
  };
  box(o, 0.5, "Observed", kObservedColor);
  box(p, 1.5, "Predicted", kPredictedColor);
  return svg.finish();
}

std::string scatter_svg(const PlotInput& in, const EvaluationReport& report) {
  double lo = in.observed.front(), hi = in.observed.front();
  for (auto s : {in.observed, in.predicted}) {
    for (double v : s) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  const Range r = padded(lo, hi);
  const Frame f(r, r);
  Svg svg(fmt::format("Predicted vs observed (r = {:.3f}, R² = {:.3f})", report.pearson_r, report.r_squared));
  svg.axes(f, "observed flow (PCU)", "predicted flow (PCU)");
  svg.line(f.px(r.lo), f.py(r.lo), f.px(r.hi), f.py(r.hi), "#888888", 1.0, "identity");
  for (std::size_t i = 0; i < in.observed.size(); ++i) {
    svg.circle(f.px(in.observed[i]), f.py(in.predicted[i]), 3.0, kObservedColor);
  }
  return svg.finish();
}

std::string timeseries_svg(const PlotInput& in) {
  const std::size_t n = in.observed.size();
  double lo = in.observed.front(), hi = in.observed.front();
  for (auto s : {in.observed, in.predicted}) {
    for (double v : s) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  const double first = static_cast<double>(in.first_bin);
  const double last = first + static_cast<double>(n - 1);
  const Frame f(n > 1 ? Range{first, last} : Range{first - 1, first + 1}, padded(lo, hi));
  Svg svg("Flow over time with OLS trend");
  svg.axes(f, "bin index", "flow (PCU per bin)");

  std::vector<std::pair<double, double>> obs, pred;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = f.px(first + static_cast<double>(i));
    obs.emplace_back(x, f.py(in.observed[i]));
    pred.emplace_back(x, f.py(in.predicted[i]));
  }
  svg.polyline(obs, kObservedColor, "observed");
  svg.polyline(pred, kPredictedColor, "predicted");
  if (n >= 2) {
    const double slope = trend_slope(in.observed);
    const double intercept = trend_intercept(in.observed);
    const double y_start = intercept;
    const double y_end = intercept + slope * static_cast<double>(n - 1);
    svg.line(f.px(first), f.py(y_start), f.px(last), f.py(y_end), "#2ca02c", 1.5, "trend");
    svg.text(kLeft + 8, kTop + 14, fmt::format("trend {:+.3f} PCU/bin", slope), "start", 11);
  }
  svg.text(kWidth - kRight - 8, kTop + 14, "observed", "end", 11);
  svg.text(kWidth - kRight - 8, kTop + 28, "predicted", "end", 11);
  return svg.finish();
}

}  // namespace

PlotSet render_plot_set(const PlotInput& input, const EvaluationReport& report) {
  if (input.observed.size() != input.predicted.size() || input.observed.empty()) {
    throw Error(ErrorKind::LengthMismatch, "plot inputs must be non-empty and equal length");
  }
  PlotSet set;
  set.observed_histogram = histogram_svg(input.observed, input.histogram_bins, "Histogram of observed flow",
                                         kObservedColor);
  set.predicted_histogram = histogram_svg(input.predicted, input.histogram_bins, "Histogram of predicted flow",
                                          kPredictedColor);
  set.boxplot = boxplot_svg(report);
  set.scatter = scatter_svg(input, report);
  set.timeseries = timeseries_svg(input);
  return set;
}

std::vector<std::filesystem::path> render_plots(const PlotInput& input, const EvaluationReport& report,
                                                const std::filesystem::path& out_dir) {
  const PlotSet set = render_plot_set(input, report);
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw Error(ErrorKind::IoError, "cannot create " + out_dir.string());
  const std::pair<const char*, const std::string*> files[] = {
      {"histogram_observed.svg", &set.observed_histogram},
      {"histogram_predicted.svg", &set.predicted_histogram},
      {"boxplot.svg", &set.boxplot},
      {"scatter.svg", &set.scatter},
      {"timeseries.svg", &set.timeseries},
  };
  std::vector<std::filesystem::path> written;
  for (const auto& [name, content] : files) {
    const std::filesystem::path path = out_dir / name;
    write_file_atomic(path, *content);
    written.push_back(path);
  }
  return written;
}

}  // namespace flowcast
