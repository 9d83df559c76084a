// Copyright 2026 The pcsqueeze Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pcsqueeze/csv.hpp"

#include <charconv>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "pcsqueeze/error.hpp"

namespace pcsq::csv {

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

double parse_double(const std::string& s, int line_no) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParameterError("line " + std::to_string(line_no) + ": bad number '" + s + "'");
  }
  return v;
}

std::optional<double> parse_optional(const std::string& s, int line_no) {
  if (s.empty()) return std::nullopt;
  return parse_double(s, line_no);
}

std::string optional_field(const std::optional<double>& v) {
  return v ? format_number(*v) : std::string();
}

template <typename Row, typename Fn>
std::vector<Row> read_rows(std::istream& in, std::string_view schema,
                           std::string_view header, std::size_t n_fields, Fn parse) {
  std::string line;
  if (!std::getline(in, line) || line != schema) {
    throw ParameterError("expected schema line '" + std::string(schema) + "'");
  }
  if (!std::getline(in, line) || line != header) {
    throw ParameterError("expected header '" + std::string(header) + "'");
  }
  std::vector<Row> rows;
  int line_no = 2;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto f = split(line);
    if (f.size() != n_fields) {
      throw ParameterError("line " + std::to_string(line_no) + ": expected " +
                           std::to_string(n_fields) + " fields");
    }
    rows.push_back(parse(f, line_no));
  }
  return rows;
}

}  // namespace

std::string format_number(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, ptr);
}

void write_timeseries(std::ostream& out,
                      const std::vector<experiments::TimeSeriesRow>& rows) {
  out << kTimeseriesSchema << '\n' << kTimeseriesHeader << '\n';
  for (const auto& r : rows) {
    out << format_number(r.t) << ',' << format_number(r.population) << ','
        << optional_field(r.xi2) << ',' << optional_field(r.zeta2) << '\n';
  }
}

void write_sweep(std::ostream& out, const std::vector<experiments::SweepRow>& rows) {
  out << kSweepSchema << '\n' << kSweepHeader << '\n';
  for (const auto& r : rows) {
    out << format_number(r.delta) << ',' << format_number(r.steady_population) << ','
        << format_number(r.zeta2_inf) << ',' << (r.bound_state_present ? 1 : 0) << '\n';
  }
}

std::vector<experiments::TimeSeriesRow> read_timeseries(std::istream& in) {
  return read_rows<experiments::TimeSeriesRow>(
      in, kTimeseriesSchema, kTimeseriesHeader, 4,
      [](const std::vector<std::string>& f, int n) {
        return experiments::TimeSeriesRow{parse_double(f[0], n), parse_double(f[1], n),
                                          parse_optional(f[2], n), parse_optional(f[3], n)};
      });
}

std::vector<experiments::SweepRow> read_sweep(std::istream& in) {
  return read_rows<experiments::SweepRow>(
      in, kSweepSchema, kSweepHeader, 4, [](const std::vector<std::string>& f, int n) {
        if (f[3] != "0" && f[3] != "1") {
          throw ParameterError("line " + std::to_string(n) + ": bound_state must be 0 or 1");
        }
        return experiments::SweepRow{parse_double(f[0], n), parse_double(f[1], n),
                                     parse_double(f[2], n), f[3] == "1"};
      });
}

}  // namespace pcsq::csv
