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

#include "flowcast/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "flowcast/config.hpp"
#include "flowcast/csv_io.hpp"
#include "flowcast/error.hpp"
#include "flowcast/flow_series.hpp"
#include "flowcast/pipeline.hpp"
#include "flowcast/report.hpp"
#include "flowcast/svg_plot.hpp"
#include "flowcast/synth.hpp"

namespace flowcast {

namespace {

namespace fs = std::filesystem;

// Thrown for problems the user fixes on the command line or in the config.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Flag values; a flag only overrides the config when it was given.
struct ModelFlags {
  std::string config_path;
  std::int64_t bin_duration = 0;
  double p0 = 0, m_t = 0, m_m = 0, q = 0, r = 0;
  std::string percent_denominator;
  std::string evaluate_mode;
  std::size_t histogram_bins = 0;
  std::size_t horizon = 0;
  CLI::Option* config_opt = nullptr;
  CLI::Option* bin_opt = nullptr;
  CLI::Option* p0_opt = nullptr;
  CLI::Option* mt_opt = nullptr;
  CLI::Option* mm_opt = nullptr;
  CLI::Option* q_opt = nullptr;
  CLI::Option* r_opt = nullptr;
  CLI::Option* denom_opt = nullptr;
  CLI::Option* mode_opt = nullptr;
  CLI::Option* hist_opt = nullptr;
  CLI::Option* horizon_opt = nullptr;

  void attach(CLI::App* app) {
    config_opt = app->add_option("--config", config_path, "key=value config file (overrides $FLOWCAST_CONFIG)");
    bin_opt = app->add_option("--bin-duration", bin_duration, "bin width in seconds (default 300)");
    p0_opt = app->add_option("--p0", p0, "initial estimate variance (default 1e6)");
    mt_opt = app->add_option("--m-t", m_t, "state transition coefficient (default 1)");
    mm_opt = app->add_option("--m-m", m_m, "measurement coefficient (default 1)");
    q_opt = app->add_option("--q", q, "process noise variance (default: estimated)");
    r_opt = app->add_option("--r", r, "measurement noise variance (default: estimated)");
    denom_opt = app->add_option("--percent-denominator", percent_denominator, "forecast|observed");
    mode_opt = app->add_option("--evaluate-mode", evaluate_mode, "predicted|filtered");
    hist_opt = app->add_option("--histogram-bins", histogram_bins, "histogram bin count (default 8)");
    horizon_opt = app->add_option("--horizon", horizon, "forecast steps past the last bin (default 3)");
  }

  RunConfig resolve() const {
    RunConfig cfg;
    try {
      if (config_opt->count() > 0) {
        apply_config_file(cfg, config_path);
      } else if (const char* env = std::getenv("FLOWCAST_CONFIG"); env != nullptr && *env != '\0') {
        apply_config_file(cfg, env);
      }
      if (bin_opt->count()) cfg.bin_duration = bin_duration;
      if (p0_opt->count()) cfg.p0 = p0;
      if (mt_opt->count()) cfg.m_t = m_t;
      if (mm_opt->count()) cfg.m_m = m_m;
      if (q_opt->count()) cfg.q = q;
      if (r_opt->count()) cfg.r = r;
      if (denom_opt->count()) apply_setting(cfg, "percent_denominator", percent_denominator);
      if (mode_opt->count()) apply_setting(cfg, "evaluate_mode", evaluate_mode);
      if (hist_opt->count()) cfg.histogram_bins = histogram_bins;
      if (horizon_opt->count()) cfg.horizon = horizon;
      cfg.validate();
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
    return cfg;
  }
};

FlowSeries load_series(const fs::path& input, const RunConfig& cfg) {
  if (detect_input_kind(input) == InputKind::Series) return read_series_csv(input, cfg.bin_duration);
  const std::vector<ClassifiedCount> records = read_counts_csv(input);
  return aggregate(records, cfg.pcu_table, cfg.bin_duration);
}

void emit(const std::string& content, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
  } else {
    write_file_atomic(path, content);
  }
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(ErrorKind::IoError, "cannot create directory " + dir.string());
}

// Report, trace and figures for a filtered series.
PipelineResult evaluate_into(const FlowSeries& series, const RunConfig& cfg, const fs::path& out_dir,
                             std::ostream& out) {
  PipelineResult res = run_pipeline(series, cfg);
  ensure_dir(out_dir);
  write_report(res, cfg, out_dir / "report.json", out_dir / "trace.csv");
  const PlotInput plots{res.observed, res.predicted, 1, cfg.histogram_bins};
  render_plots(plots, res.report, out_dir);
  out << "bins " << series.size() << ", MAPE " << format_number(res.report.mape_percent) << "% ("
      << to_string(res.report.mape_band) << "), RMSPE " << format_number(res.report.rmspe_percent) << "% ("
      << to_string(res.report.rmspe_band) << "), R^2 " << format_number(res.report.r_squared) << ", trend "
      << format_number(res.report.trend_slope) << " PCU/bin\n"
      << "wrote " << (out_dir / "report.json").string() << ", " << (out_dir / "trace.csv").string()
      << " and 5 figures\n";
  return res;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Short-term traffic flow forecasting with PCU conversion and a scalar Kalman filter", "flowcast"};
  app.require_subcommand(1);

  // convert
  CLI::App* convert = app.add_subcommand("convert", "counts CSV -> PCU series CSV");
  ModelFlags convert_flags;
  std::string convert_input, convert_out;
  convert->add_option("input", convert_input, "counts CSV (timestamp,vehicle_class,count)")->required();
  convert->add_option("-o,--out", convert_out, "series CSV path (default stdout)");
  convert_flags.attach(convert);

  // forecast
  CLI::App* forecast = app.add_subcommand("forecast", "filter a series and forecast the next bins");
  ModelFlags forecast_flags;
  std::string forecast_input, forecast_trace;
  forecast->add_option("input", forecast_input, "series CSV (bin_start,pcu) or counts CSV")->required();
  forecast->add_option("--trace-out", forecast_trace, "write the per-bin trace CSV here");
  forecast_flags.attach(forecast);

  // evaluate
  CLI::App* evaluate_cmd = app.add_subcommand("evaluate", "score forecasts, write report and figures");
  ModelFlags evaluate_flags;
  std::string evaluate_input, evaluate_out_dir;
  evaluate_cmd->add_option("input", evaluate_input, "observed series CSV or counts CSV")->required();
  CLI::Option* evaluate_dir_opt = evaluate_cmd->add_option("--out-dir", evaluate_out_dir, "output directory");
  evaluate_flags.attach(evaluate_cmd);

  // simulate
  CLI::App* simulate = app.add_subcommand("simulate", "generate a synthetic counts CSV");
  std::string preset_name, simulate_out;
  std::uint64_t seed = 0;
  std::int64_t duration = 0, sim_bin = 0;
  double base_flow = 0, trend = 0, noise_cv = 0, persistence = 0;
  CLI::Option* preset_opt = simulate->add_option("--preset", preset_name, "paper-like | steady | volatile");
  CLI::Option* seed_opt = simulate->add_option("--seed", seed, "random seed");
  CLI::Option* duration_opt = simulate->add_option("--duration", duration, "seconds (default 10800)");
  CLI::Option* sim_bin_opt = simulate->add_option("--bin-duration", sim_bin, "seconds (default 300)");
  CLI::Option* base_opt = simulate->add_option("--base-flow", base_flow, "PCU per bin at the start");
  CLI::Option* trend_opt = simulate->add_option("--trend", trend, "PCU per bin added each bin");
  CLI::Option* cv_opt = simulate->add_option("--noise-cv", noise_cv, "coefficient of variation of bin PCU");
  CLI::Option* persist_opt = simulate->add_option("--noise-persistence", persistence, "AR(1) noise coefficient");
  simulate->add_option("-o,--out", simulate_out, "counts CSV path (default stdout)");

  // run
  CLI::App* run = app.add_subcommand("run", "counts CSV -> series, trace, report and figures");
  ModelFlags run_flags;
  std::string run_input, run_out_dir;
  run->add_option("input", run_input, "counts CSV")->required();
  CLI::Option* run_dir_opt = run->add_option("--out-dir", run_out_dir, "output directory");
  run_flags.attach(run);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "flowcast: " << e.what() << "\n";
    err << "run 'flowcast --help' for usage\n";
    return kExitUsage;
  }

  try {
    if (convert->parsed()) {
      const RunConfig cfg = convert_flags.resolve();
      const std::vector<ClassifiedCount> records = read_counts_csv(convert_input);
      emit(series_to_csv(aggregate(records, cfg.pcu_table, cfg.bin_duration)), convert_out, out);
    } else if (forecast->parsed()) {
      const RunConfig cfg = forecast_flags.resolve();
      const FlowSeries series = load_series(forecast_input, cfg);
      const ModelParams params = resolve_params(series, cfg);
      const FilterTrace trace = filter_series(series, params.filter, params.p0);
      if (!forecast_trace.empty()) write_file_atomic(forecast_trace, trace_to_csv(series, trace, params.filter));
      const std::vector<double> next = forecast_next(trace.steps.back().posterior, params.filter, cfg.horizon);
      out << "bin_start,forecast\n";
      for (std::size_t h = 0; h < next.size(); ++h) {
        out << series.bin_start(series.size() + h) << ',' << format_number(next[h]) << '\n';
      }
    } else if (evaluate_cmd->parsed()) {
      RunConfig cfg = evaluate_flags.resolve();
      if (evaluate_dir_opt->count()) cfg.out_dir = evaluate_out_dir;
      evaluate_into(load_series(evaluate_input, cfg), cfg, cfg.out_dir, out);
    } else if (simulate->parsed()) {
      Scenario sc;
      try {
        if (preset_opt->count()) sc = preset(preset_name);
      } catch (const Error& e) {
        throw UsageError(e.what());
      }
      if (seed_opt->count()) sc.seed = seed;
      if (duration_opt->count()) sc.duration = duration;
      if (sim_bin_opt->count()) sc.bin_duration = sim_bin;
      if (base_opt->count()) sc.base_flow = base_flow;
      if (trend_opt->count()) sc.trend = trend;
      if (cv_opt->count()) sc.noise_cv = noise_cv;
      if (persist_opt->count()) sc.noise_persistence = persistence;
      try {
        sc.validate();
      } catch (const Error& e) {
        throw UsageError(e.what());
      }
      emit(counts_to_csv(generate(sc)), simulate_out, out);
    } else if (run->parsed()) {
      RunConfig cfg = run_flags.resolve();
      if (run_dir_opt->count()) cfg.out_dir = run_out_dir;
      const std::vector<ClassifiedCount> records = read_counts_csv(run_input);
      const FlowSeries series = aggregate(records, cfg.pcu_table, cfg.bin_duration);
      ensure_dir(cfg.out_dir);
      write_file_atomic(cfg.out_dir / "series.csv", series_to_csv(series));
      evaluate_into(series, cfg, cfg.out_dir, out);
    }
  } catch (const UsageError& e) {
    err << "flowcast: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "flowcast: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    err << "flowcast: " << e.what() << "\n";
    return kExitData;
  }
  return kExitOk;
}

}  // namespace flowcast
