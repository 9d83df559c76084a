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

// Experiment drivers and the validation report.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pcsqueeze/params.hpp"

namespace pcsq::experiments {

struct TimeSeriesRow {
  double t = 0.0;
  double population = 1.0;
  /// Empty where the mean spin vanishes.
  std::optional<double> xi2;
  std::optional<double> zeta2;
};

struct SweepRow {
  double delta = 0.0;
  double steady_population = 0.0;
  double zeta2_inf = 0.0;
  bool bound_state_present = false;
};

std::vector<TimeSeriesRow> run_timeseries(const ReservoirParams& r,
                                          const EnsembleParams& e,
                                          const TimeGrid& g);

/// Evenly spaced detunings from lo to hi inclusive. ParameterError when
/// n_points < 2 or lo >= hi.
std::vector<double> detuning_grid(double lo, double hi, int n_points);

std::vector<SweepRow> run_sweep(const ReservoirParams& r_template,
                                const EnsembleParams& e, double delta_lo,
                                double delta_hi, int n_points);

struct SweepDefaults {
  double lo;
  double hi;
  int n_points;
};
SweepDefaults default_sweep_range(Model model);

/// Bisects on bound_state_present until the bracket is narrower than
/// `width`; returns its midpoint. The template must be anisotropic with a
/// bound state at lo but not at hi, otherwise ParameterError.
double locate_transition(const ReservoirParams& r_template,
                         const EnsembleParams& e, double delta_lo,
                         double delta_hi, double width = 1e-4);

struct ValidationOptions {
  /// Phase added to every memory kernel before the oracle comparison.
  double kernel_phase_offset = 0.0;
};

struct SuiteResult {
  std::string name;
  bool passed = false;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  std::vector<std::pair<std::string, double>> cases;
};

struct ValidationReport {
  std::vector<SuiteResult> suites;
  bool passed() const;
  /// Pretty-printed JSON.
  std::string to_json() const;
};

ValidationReport run_validation(const ValidationOptions& opts = {});

}  // namespace pcsq::experiments
