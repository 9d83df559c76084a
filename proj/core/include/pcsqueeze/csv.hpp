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

#pragma once

// CSV persistence for experiment output. Every file opens with a schema
// comment line, e.g. "# pcsqueeze timeseries v1", followed by the header
// row. Numbers use the shortest representation that round-trips; undefined
// values are empty fields.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "pcsqueeze/experiments.hpp"

namespace pcsq::csv {

inline constexpr std::string_view kTimeseriesSchema = "# pcsqueeze timeseries v1";
inline constexpr std::string_view kSweepSchema = "# pcsqueeze sweep v1";
inline constexpr std::string_view kTimeseriesHeader = "t,population,xi2,zeta2";
inline constexpr std::string_view kSweepHeader =
    "delta,steady_population,zeta2_inf,bound_state";

std::string format_number(double v);

void write_timeseries(std::ostream& out,
                      const std::vector<experiments::TimeSeriesRow>& rows);
void write_sweep(std::ostream& out, const std::vector<experiments::SweepRow>& rows);

/// Parsers for round-trip checks; throw ParameterError on schema mismatch.
std::vector<experiments::TimeSeriesRow> read_timeseries(std::istream& in);
std::vector<experiments::SweepRow> read_sweep(std::istream& in);

}  // namespace pcsq::csv
