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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Usage: acceptance_test [work_dir]

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "flowcast/cli.hpp"
#include "flowcast/csv_io.hpp"
#include "flowcast/error.hpp"
#include "flowcast/evaluation.hpp"
#include "flowcast/kalman.hpp"
#include "flowcast/vehicle_pcu.hpp"
#include "oracles.hpp"

namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

fs::path g_work = fs::temp_directory_path() / "flowcast_acceptance";

// Collects failures for one criterion.
struct Check {
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok && failures.size() < 5) failures.push_back(what);
    if (!ok) ++count;
  }
  std::size_t count = 0;
};

struct CliOutcome {
  int code;
  std::string err;
};

CliOutcome cli(std::vector<std::string> args) {
  args.insert(args.begin(), "flowcast");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = flowcast::cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string num(double v) { return flowcast::format_number(v); }

// ---------------------------------------------------------------------------

void band_reproduction(Check& c) {
  c.expect(flowcast::mape_band(14.62) == flowcast::MapeBand::Good, "mape_band(14.62) != Good");
  c.expect(flowcast::rmspe_band(18.73) == flowcast::RmspeBand::Acceptable, "rmspe_band(18.73) != Acceptable");
}

void correlation_consistency(Check& c) {
  // b = rho * a + sqrt(1 - rho^2) * e with a, e centred, unit-norm and
  // orthogonal, so pearson(a, b) = rho up to rounding.
  const std::vector<double> a = {-3, -1, 1, 3};
  const std::vector<double> e = {1, -1, -1, 1};
  const double na = std::sqrt(20.0), ne = 2.0;
  const double rho = 0.937;
  std::vector<double> b(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) b[i] = rho * a[i] / na + std::sqrt(1 - rho * rho) * e[i] / ne;
  const double r = flowcast::pearson(a, b);
  c.expect(std::abs(r - rho) < 1e-12, "constructed pair has pearson " + num(r));
  const double r2 = flowcast::r_squared(a, b);
  c.expect(std::abs(r2 - 0.878) <= 0.001, "r_squared " + num(r2) + " not within 0.878 +/- 0.001");
  c.expect(std::abs(r2 - 0.879) <= 0.0015, "r_squared " + num(r2) + " inconsistent with reported 0.879");
}

void pcu_golden(Check& c) {
  using VC = flowcast::VehicleClass;
  const flowcast::PcuTable t;
  const std::pair<VC, double> table1[] = {{VC::Bus, 3.0},        {VC::Truck, 3.0},
                                          {VC::Cng, 0.75},       {VC::PrivateCar, 1.0},
                                          {VC::CommercialVehicle, 1.0}, {VC::Utility, 1.0},
                                          {VC::Motorcycle, 0.75}, {VC::Bicycle, 0.5},
                                          {VC::CycleRickshaw, 2.0}};
  for (auto [cls, want] : table1) {
    c.expect(flowcast::pcu_factor(t, cls) == want, std::string(flowcast::canonical_label(cls)) + " factor");
  }
  flowcast::ClassCounts counts{};
  c.expect(flowcast::to_pcu(t, counts) == 0.0, "empty to_pcu");
  counts[flowcast::index_of(VC::Bus)] = 1;
  c.expect(flowcast::to_pcu(t, counts) == 3.0, "{Bus:1}");
  counts = {};
  counts[flowcast::index_of(VC::Bus)] = 2;
  counts[flowcast::index_of(VC::PrivateCar)] = 5;
  counts[flowcast::index_of(VC::CycleRickshaw)] = 10;
  counts[flowcast::index_of(VC::Motorcycle)] = 4;
  c.expect(flowcast::to_pcu(t, counts) == 34.0, "composite example");

  std::mt19937_64 rng(1001);
  std::uniform_int_distribution<std::int64_t> d(0, 10000);
  for (int trial = 0; trial < 1000; ++trial) {
    flowcast::ClassCounts a{}, b{}, s{};
    for (std::size_t k = 0; k < a.size(); ++k) {
      a[k] = d(rng);
      b[k] = d(rng);
      s[k] = a[k] + b[k];
    }
    c.expect(flowcast::to_pcu(t, a) + flowcast::to_pcu(t, b) == flowcast::to_pcu(t, s),
             "linearity trial " + std::to_string(trial));
  }
}

void filter_oracle(Check& c) {
  std::mt19937_64 rng(4004);
  const flowcast::FilterParams p{1.0, 0.0, 1.0, 100.0};
  for (int trial = 0; trial < 200; ++trial) {
    const auto z = flowcast::oracle::random_series(rng, 2 + rng() % 31, 0, 1000);
    const auto trace = flowcast::filter_series(z, p, 1e12);
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
      std::vector<double> prefix(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(i + 2));
      const double want = flowcast::oracle::mean(prefix);
      const double err = flowcast::oracle::rel_err(trace.steps[i].posterior.estimate, want);
      c.expect(err <= 1e-6, "trial " + std::to_string(trial) + " step " + std::to_string(i) + " rel err " + num(err));
    }
  }
}

void filter_invariants(Check& c) {
  std::mt19937_64 rng(5005);
  std::uniform_real_distribution<double> var(1e-3, 1e4);
  std::uniform_real_distribution<double> coef(0.5, 1.5);
  std::uniform_real_distribution<double> shift(-500, 500);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto z = flowcast::oracle::random_series(rng, 2 + rng() % 63, 0, 1500);
    const flowcast::FilterParams p{coef(rng), var(rng), 1.0, var(rng)};
    const auto trace = flowcast::filter_series(z, p, 1e6);
    const std::string tag = "trial " + std::to_string(trial);
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
      const auto& s = trace.steps[i];
      const double lhs = s.posterior.estimate - s.prior.estimate;
      const double rhs = s.gain * s.innovation;
      c.expect(std::abs(lhs - rhs) <= 1e-12 * std::max({1.0, std::abs(s.posterior.estimate), std::abs(s.prior.estimate)}),
               tag + ": update identity");
      const double km = s.gain * p.measurement;
      c.expect(km >= 0.0 && km <= 1.0, tag + ": gain bounds");
      c.expect(s.posterior.variance <= s.prior.variance && s.posterior.variance >= 0.0, tag + ": variance");
      const double lo = std::min(s.prior.estimate, z[i + 1]);
      const double hi = std::max(s.prior.estimate, z[i + 1]);
      c.expect(s.posterior.estimate >= lo && s.posterior.estimate <= hi, tag + ": convexity");
    }
    // Causality: perturb observations from a random cut onward.
    const std::size_t cut = 1 + rng() % (z.size() - 1);
    auto changed = z;
    for (std::size_t j = cut; j < z.size(); ++j) changed[j] += shift(rng);
    const auto other = flowcast::filter_series(changed, p, 1e6);
    for (std::size_t i = 0; i + 1 <= cut - 1 + 1 && i < cut; ++i) {
      // steps[i] forecasts observation i + 1, which uses observations 0..i.
      c.expect(other.steps[i].forecast == trace.steps[i].forecast, tag + ": causality");
    }
  }
}

void metric_identities(Check& c) {
  std::mt19937_64 rng(6006);
  std::uniform_real_distribution<double> scale(1e-3, 1e3);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + rng() % 64;
    const auto f = flowcast::oracle::random_series(rng, n, 1, 2000);
    const auto o = flowcast::oracle::random_series(rng, n, 1, 2000);
    const double m = flowcast::mape(f, o);
    const double r = flowcast::rmspe(f, o);
    const std::string tag = "pair " + std::to_string(trial);
    c.expect(flowcast::oracle::rel_err(m, flowcast::oracle::mape(f, o)) <= 1e-12, tag + ": mape oracle");
    c.expect(flowcast::oracle::rel_err(r, flowcast::oracle::rmspe(f, o)) <= 1e-12, tag + ": rmspe oracle");
    c.expect(r >= m * (1.0 - 1e-15), tag + ": rmspe >= mape");
    if (trial < 100) {
      const double k = scale(rng);
      auto fk = f, ok = o;
      for (double& x : fk) x *= k;
      for (double& x : ok) x *= k;
      c.expect(flowcast::oracle::rel_err(flowcast::mape(fk, ok), m) <= 1e-12, tag + ": mape scale invariance");
      c.expect(flowcast::oracle::rel_err(flowcast::rmspe(fk, ok), r) <= 1e-12, tag + ": rmspe scale invariance");
    }
  }
}

struct E2e {
  double seconds = 0.0;
};

E2e run_end_to_end(Check& c, const fs::path& dir) {
  fs::remove_all(dir);
  fs::create_directories(dir);
  const auto start = Clock::now();
  const auto sim = cli({"simulate", "--preset", "paper-like", "--out", (dir / "counts.csv").string()});
  const auto run = cli({"run", (dir / "counts.csv").string(), "--out-dir", (dir / "results").string()});
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  c.expect(sim.code == 0, "simulate exit " + std::to_string(sim.code) + " " + sim.err);
  c.expect(run.code == 0, "run exit " + std::to_string(run.code) + " " + run.err);
  return {seconds};
}

void end_to_end(Check& c) {
  const E2e e = run_end_to_end(c, g_work / "e2e_a");
  if (!c.failures.empty()) return;
  const auto doc = nlohmann::json::parse(slurp(g_work / "e2e_a" / "results" / "report.json"));
  const double mape = doc.at("mape_percent").get<double>();
  const double r2 = doc.at("r_squared").get<double>();
  const double slope = doc.at("trend_slope").get<double>();
  std::cout << "      paper-like: MAPE " << num(mape) << "%, RMSPE " << num(doc.at("rmspe_percent").get<double>())
            << "%, R^2 " << num(r2) << ", trend " << num(slope) << " PCU/bin, pipeline " << e.seconds << " s\n";
  c.expect(mape >= 0.0 && mape < 20.0, "MAPE " + num(mape) + " outside [0, 20)");
  c.expect(r2 > 0.7, "r_squared " + num(r2) + " <= 0.7");
  c.expect(slope > 0.0, "trend_slope " + num(slope) + " <= 0");
  c.expect(e.seconds < 1.0, "pipeline took " + std::to_string(e.seconds) + " s");
}

void determinism(Check& c) {
  run_end_to_end(c, g_work / "e2e_a");
  run_end_to_end(c, g_work / "e2e_b");
  if (!c.failures.empty()) return;
  for (const char* f : {"counts.csv"}) {
    c.expect(slurp(g_work / "e2e_a" / f) == slurp(g_work / "e2e_b" / f), std::string(f) + " differs");
  }
  for (const char* f : {"report.json", "trace.csv", "series.csv", "histogram_observed.svg", "histogram_predicted.svg",
                        "boxplot.svg", "scatter.svg", "timeseries.svg"}) {
    const auto a = slurp(g_work / "e2e_a" / "results" / f);
    c.expect(!a.empty(), std::string(f) + " missing");
    c.expect(a == slurp(g_work / "e2e_b" / "results" / f), std::string(f) + " differs");
  }
}

void descriptive_oracle(Check& c) {
  std::mt19937_64 rng(9009);
  for (int trial = 0; trial < 500; ++trial) {
    const auto v = flowcast::oracle::random_series(rng, 1 + rng() % 200, 100, 1000);
    const auto got = flowcast::descriptive(v);
    const auto want = flowcast::oracle::sorted_stats(v);
    const std::string tag = "array " + std::to_string(trial);
    auto close = [](double a, double b) { return flowcast::oracle::rel_err(a, b) <= 1e-12; };
    c.expect(close(got.mean, want.mean), tag + ": mean");
    c.expect(v.size() == 1 ? got.std_dev == 0.0 : close(got.std_dev, want.sd), tag + ": sd");
    c.expect(close(got.median, want.median), tag + ": median");
    c.expect(close(got.q1, want.q1), tag + ": q1");
    c.expect(close(got.q3, want.q3), tag + ": q3");
    c.expect(got.min == want.min && got.max == want.max, tag + ": range");
  }
}

flowcast::ErrorKind parse_kind(const std::string& text) {
  std::istringstream in(text);
  try {
    flowcast::parse_counts_csv(in);
  } catch (const flowcast::Error& e) {
    return e.kind();
  }
  return flowcast::ErrorKind::IoError;  // sentinel: parsed fine
}

void csv_robustness(Check& c) {
  using flowcast::ErrorKind;
  const std::string header = "timestamp,vehicle_class,count\n";
  c.expect(parse_kind(header + "0,Bus\n") == ErrorKind::MalformedRow, "short row");
  c.expect(parse_kind(header + "0,Bus,many\n") == ErrorKind::MalformedRow, "non-integer count");
  c.expect(parse_kind(header + "noon,Bus,1\n") == ErrorKind::MalformedRow, "bad timestamp");
  c.expect(parse_kind(header + "0,hovercraft,1\n") == ErrorKind::UnknownVehicleClass, "unknown class");
  c.expect(parse_kind(header) == ErrorKind::EmptyInput, "header only");
  c.expect(parse_kind("") == ErrorKind::EmptyInput, "empty file");

  const fs::path dir = g_work / "csv";
  fs::remove_all(dir);
  fs::create_directories(dir);
  auto write = [&](const char* name, const std::string& text) {
    std::ofstream(dir / name, std::ios::binary) << text;
    return (dir / name).string();
  };
  const std::string out = (dir / "out").string();
  c.expect(cli({"run", write("short.csv", header + "0,Bus\n"), "--out-dir", out}).code == 2, "malformed exit");
  c.expect(cli({"run", write("unk.csv", header + "0,hovercraft,1\n"), "--out-dir", out}).code == 2, "unknown exit");
  c.expect(cli({"run", write("empty.csv", ""), "--out-dir", out}).code == 2, "empty exit");
  c.expect(cli({"run", (dir / "missing.csv").string()}).code == 2, "missing exit");
  c.expect(cli({"run", "--bin-duration", "0", write("ok.csv", header + "0,Bus,1\n")}).code == 1, "config exit");

  // Fuzz: mutations of a valid file plus raw noise, up to 1 MB.
  std::mt19937_64 rng(10010);
  std::string valid = header;
  for (int i = 0; i < 400; ++i) {
    valid += std::to_string(1611129600 + 30 * i) + "," +
             std::string(flowcast::canonical_label(flowcast::kAllVehicleClasses[i % 9])) + "," +
             std::to_string(i % 17) + "\n";
  }
  const std::string noise_alphabet = "0123456789,-:TZ \r\n\t\"'BusCarbike\xEF\xBB\xBF\xFF\x00.+eE";
  std::uniform_int_distribution<int> byte(0, 255);
  const auto deadline = Clock::now() + std::chrono::seconds(50);
  std::size_t cases = 0;
  for (int trial = 0; trial < 600 && Clock::now() < deadline; ++trial) {
    std::string text;
    switch (trial % 4) {
      case 0: {  // byte flips
        text = valid;
        for (int k = 0; k < 1 + static_cast<int>(rng() % 20); ++k) text[rng() % text.size()] = static_cast<char>(byte(rng));
        break;
      }
      case 1: {  // truncation + garbage tail
        text = valid.substr(0, rng() % valid.size());
        for (int k = 0; k < static_cast<int>(rng() % 200); ++k) text.push_back(noise_alphabet[rng() % noise_alphabet.size()]);
        break;
      }
      case 2: {  // raw noise of random size, occasionally near 1 MB
        const std::size_t size = trial % 40 == 2 ? (1u << 20) - rng() % 1024 : rng() % 4096;
        text = (rng() % 2 ? header : std::string());
        while (text.size() < size) text.push_back(static_cast<char>(byte(rng)));
        text.resize(std::min<std::size_t>(text.size(), 1u << 20));
        break;
      }
      default: {  // valid rows with extreme field values
        text = header;
        const char* stamps[] = {"-9223372036854775808", "9223372036854775807", "0", "99999999999", "1611129600"};
        const char* counts[] = {"9223372036854775807", "0", "1", "-0", "+5"};
        for (int k = 0; k < 1 + static_cast<int>(rng() % 5); ++k) {
          text += std::string(stamps[rng() % 5]) + ",Bus," + counts[rng() % 5] + "\n";
        }
        break;
      }
    }
    ++cases;
    try {
      std::istringstream in(text);
      flowcast::parse_counts_csv(in);
    } catch (const flowcast::Error&) {
    } catch (const std::exception& e) {
      c.expect(false, std::string("parser escaped with ") + e.what());
    }
    if (trial % 3 == 0) {
      const int code = cli({"run", write("fuzz.csv", text), "--out-dir", out}).code;
      c.expect(code == 0 || code == 2, "fuzz run exit " + std::to_string(code) + " on trial " + std::to_string(trial));
    }
  }
  std::cout << "      fuzz cases: " << cases << "\n";
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<void(Check&)> body;
};

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_work = argv[1];
  fs::create_directories(g_work);

  const std::vector<Criterion> criteria = {
      {1, "band reproduction (14.62 -> good, 18.73 -> acceptable)", 1e-3, band_reproduction},
      {2, "correlation consistency (0.937^2 = 0.878 +/- 0.001)", 1e-3, correlation_consistency},
      {3, "PCU golden suite + 1000 linearity pairs", 1.0, pcu_golden},
      {4, "filter vs brute-force running mean (200 series, 1e-6)", 1.0, filter_oracle},
      {5, "filter invariants on 1000 randomized runs", 5.0, filter_invariants},
      {6, "metric identities vs direct oracles (1000 pairs, 1e-12)", 2.0, metric_identities},
      {7, "end-to-end paper-like run (MAPE < 20, R^2 > 0.7, slope > 0)", 5.0, end_to_end},
      {8, "determinism of report, trace and figures", 10.0, determinism},
      {9, "descriptive stats vs sorted-array oracle (500 arrays, 1e-12)", 5.0, descriptive_oracle},
      {10, "CSV robustness, exit codes and fuzzing (<= 1 MB)", 60.0, csv_robustness},
  };

  int failed = 0;
  for (const Criterion& cr : criteria) {
    Check check;
    const auto start = Clock::now();
    try {
      cr.body(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("unexpected exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    check.expect(seconds < cr.budget_seconds,
                 "took " + std::to_string(seconds) + " s, budget " + std::to_string(cr.budget_seconds) + " s");
    const bool ok = check.count == 0;
    if (!ok) ++failed;
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << cr.id << ": " << cr.name << " (" << seconds * 1e3
              << " ms)\n";
    for (const std::string& f : check.failures) std::cout << "      - " << f << "\n";
    if (check.count > check.failures.size()) {
      std::cout << "      ... " << check.count - check.failures.size() << " more\n";
    }
  }
  std::cout << (failed == 0 ? "all acceptance criteria passed\n" : std::to_string(failed) + " criteria failed\n");
  return failed == 0 ? 0 : 1;
}
