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

#include "flowcast/csv_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>

#include "flowcast/error.hpp"

namespace flowcast {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = line.find(',', pos);
    out.push_back(trim(line.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

// Reads lines, stripping CR and a leading BOM; blank lines are skipped.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::string& line) {
    while (std::getline(in_, line)) {
      ++number_;
      if (number_ == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!trim(line).empty()) return true;
    }
    return false;
  }

  [[nodiscard]] std::size_t number() const noexcept { return number_; }

 private:
  std::istream& in_;
  std::size_t number_ = 0;
};

[[noreturn]] void malformed(std::size_t line, const std::string& reason) {
  throw Error(ErrorKind::MalformedRow, "line " + std::to_string(line) + ": " + reason);
}

template <typename Int>
bool parse_int(std::string_view text, Int& out) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc{} && ptr == text.data() + text.size() && !text.empty();
}

bool parse_double(std::string_view text, double& out) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc{} && ptr == text.data() + text.size() && !text.empty();
}

// Days since 1970-01-01 for a proleptic Gregorian date.
std::int64_t days_from_civil(std::int64_t y, unsigned m, unsigned d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const auto yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

bool is_leap(std::int64_t y) { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }

std::ifstream open_input(const std::filesystem::path& path) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) {
    throw Error(ErrorKind::FileNotFound, path.string());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::FileNotFound, path.string());
  return in;
}

}  // namespace

std::string format_number(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

std::int64_t parse_timestamp(std::string_view text) {
  text = trim(text);
  std::int64_t epoch = 0;
  if (parse_int(text, epoch)) return epoch;

  // YYYY-MM-DD[T ]HH:MM:SS[Z|+00:00]
  auto bad = [&] { throw Error(ErrorKind::MalformedRow, "bad timestamp '" + std::string(text) + "'"); };
  if (text.size() < 19) bad();
  std::string_view tail = text.substr(19);
  if (!(tail.empty() || tail == "Z" || tail == "z" || tail == "+00:00" || tail == "+0000")) bad();
  if (text[4] != '-' || text[7] != '-' || (text[10] != 'T' && text[10] != ' ') || text[13] != ':' ||
      text[16] != ':') {
    bad();
  }
  auto digits = [&](std::size_t pos, std::size_t len) {
    unsigned v = 0;
    for (std::size_t i = pos; i < pos + len; ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) bad();
      v = v * 10 + static_cast<unsigned>(text[i] - '0');
    }
    return v;
  };
  const std::int64_t year = digits(0, 4);
  const unsigned month = digits(5, 2), day = digits(8, 2);
  const unsigned hour = digits(11, 2), minute = digits(14, 2), second = digits(17, 2);
  static constexpr unsigned kDays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  if (month < 1 || month > 12) bad();
  const unsigned month_days = kDays[month - 1] + ((month == 2 && is_leap(year)) ? 1 : 0);
  if (day < 1 || day > month_days || hour > 23 || minute > 59 || second > 59) bad();
  return days_from_civil(year, month, day) * 86400 + hour * 3600 + minute * 60 + second;
}

std::vector<ClassifiedCount> parse_counts_csv(std::istream& in) {
  LineReader reader(in);
  std::string line;
  if (!reader.next(line)) throw Error(ErrorKind::EmptyInput, "counts file has no header");
  {
    const auto header = split_fields(line);
    if (header.size() != 3 || lower(header[0]) != "timestamp" || lower(header[1]) != "vehicle_class" ||
        lower(header[2]) != "count") {
      malformed(reader.number(), "expected header 'timestamp,vehicle_class,count'");
    }
  }

  std::vector<ClassifiedCount> records;
  while (reader.next(line)) {
    const std::size_t n = reader.number();
    const auto fields = split_fields(line);
    if (fields.size() != 3) malformed(n, "expected 3 fields, got " + std::to_string(fields.size()));
    ClassifiedCount rec;
    try {
      rec.timestamp = parse_timestamp(fields[0]);
    } catch (const Error& e) {
      malformed(n, e.what());
    }
    try {
      rec.vehicle_class = parse_vehicle_class(fields[1]);
    } catch (const Error&) {
      throw Error(ErrorKind::UnknownVehicleClass, "line " + std::to_string(n) + ": '" + std::string(fields[1]) + "'");
    }
    if (!parse_int(fields[2], rec.count)) malformed(n, "count '" + std::string(fields[2]) + "' is not an integer");
    if (rec.count < 0) malformed(n, "negative count " + std::to_string(rec.count));
    records.push_back(rec);
  }
  if (records.empty()) throw Error(ErrorKind::EmptyInput, "counts file has no data rows");
  return records;
}

std::vector<ClassifiedCount> read_counts_csv(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  return parse_counts_csv(in);
}

std::string counts_to_csv(const std::vector<ClassifiedCount>& records) {
  std::string out = "timestamp,vehicle_class,count\n";
  for (const ClassifiedCount& r : records) {
    out += std::to_string(r.timestamp);
    out += ',';
    out += canonical_label(r.vehicle_class);
    out += ',';
    out += std::to_string(r.count);
    out += '\n';
  }
  return out;
}

FlowSeries parse_series_csv(std::istream& in, std::int64_t fallback_bin_duration) {
  LineReader reader(in);
  std::string line;
  if (!reader.next(line)) throw Error(ErrorKind::EmptyInput, "series file has no header");
  {
    const auto header = split_fields(line);
    if (header.size() != 2 || lower(header[0]) != "bin_start" || lower(header[1]) != "pcu") {
      malformed(reader.number(), "expected header 'bin_start,pcu'");
    }
  }

  std::vector<std::int64_t> starts;
  FlowSeries series;
  while (reader.next(line)) {
    const std::size_t n = reader.number();
    const auto fields = split_fields(line);
    if (fields.size() != 2) malformed(n, "expected 2 fields, got " + std::to_string(fields.size()));
    std::int64_t start = 0;
    try {
      start = parse_timestamp(fields[0]);
    } catch (const Error& e) {
      malformed(n, e.what());
    }
    double value = 0.0;
    if (!parse_double(fields[1], value) || !std::isfinite(value)) {
      malformed(n, "pcu '" + std::string(fields[1]) + "' is not a finite number");
    }
    if (value < 0.0) malformed(n, "negative pcu");
    if (starts.size() >= 2 && start - starts.back() != starts[1] - starts[0]) {
      malformed(n, "bin starts are not evenly spaced");
    }
    if (!starts.empty() && start <= starts.back()) malformed(n, "bin starts must increase");
    starts.push_back(start);
    series.values.push_back(value);
  }
  if (starts.empty()) throw Error(ErrorKind::EmptyInput, "series file has no data rows");
  series.start_time = starts.front();
  series.bin_duration = starts.size() >= 2 ? starts[1] - starts[0] : fallback_bin_duration;
  return series;
}

FlowSeries read_series_csv(const std::filesystem::path& path, std::int64_t fallback_bin_duration) {
  std::ifstream in = open_input(path);
  return parse_series_csv(in, fallback_bin_duration);
}

std::string series_to_csv(const FlowSeries& series) {
  std::string out = "bin_start,pcu\n";
  for (std::size_t i = 0; i < series.size(); ++i) {
    out += std::to_string(series.bin_start(i));
    out += ',';
    out += format_number(series.values[i]);
    out += '\n';
  }
  return out;
}

InputKind detect_input_kind(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  LineReader reader(in);
  std::string line;
  if (!reader.next(line)) throw Error(ErrorKind::EmptyInput, path.string() + " is empty");
  const auto header = split_fields(line);
  if (!header.empty() && lower(header[0]) == "bin_start") return InputKind::Series;
  if (!header.empty() && lower(header[0]) == "timestamp") return InputKind::Counts;
  malformed(reader.number(), "unrecognized header '" + line + "'");
}

std::string trace_to_csv(const FlowSeries& series, const FilterTrace& trace, const FilterParams& params) {
  if (trace.steps.size() + 1 != series.size()) {
    throw Error(ErrorKind::LengthMismatch, "trace has " + std::to_string(trace.steps.size()) +
                                               " steps for a series of " + std::to_string(series.size()));
  }
  std::string out = "bin_start,observed,forecast,filtered,gain,innovation\n";
  out += std::to_string(series.bin_start(0)) + ',' + format_number(series.values[0]) + ",," +
         format_number(params.measurement * trace.initial_state.estimate) + ",,\n";
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const FilterStep& s = trace.steps[i];
    out += std::to_string(series.bin_start(i + 1));
    for (double v : {series.values[i + 1], s.forecast, params.measurement * s.posterior.estimate, s.gain,
                     s.innovation}) {
      out += ',';
      out += format_number(v);
    }
    out += '\n';
  }
  return out;
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::IoError, "cannot open " + tmp.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw Error(ErrorKind::IoError, "write to " + tmp.string() + " failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(ErrorKind::IoError, "cannot rename onto " + path.string());
  }
}

}  // namespace flowcast
