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

#include "pcsqueeze/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <string>

#include "json.hpp"

#include "pcsqueeze/channel.hpp"
#include "pcsqueeze/error.hpp"
#include "pcsqueeze/reservoir.hpp"
#include "pcsqueeze/squeezing.hpp"
#include "pcsqueeze/volterra.hpp"

namespace pcsq::experiments {

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

std::string case_label(const ReservoirParams& p) {
  std::string s(to_string(p.model()));
  s += " delta=" + fmt(p.delta());
  if (p.omega_c()) s += " omega_c=" + fmt(*p.omega_c());
  return s;
}

constexpr double kInf = std::numeric_limits<double>::infinity();

void finish(SuiteResult& s) {
  s.max_deviation = 0.0;
  for (const auto& [name, dev] : s.cases) {
    s.max_deviation = std::isfinite(dev) ? std::max(s.max_deviation, dev) : kInf;
  }
  s.passed = s.max_deviation <= s.tolerance;
}

std::vector<ReservoirParams> oracle_parameter_sets() {
  std::vector<ReservoirParams> out;
  for (double d : {-10.0, -5.0, 0.0, 1.0, 5.0}) {
    out.push_back(ReservoirParams::isotropic(d));
  }
  for (double d : {-1.0, -0.2, 0.0, 0.2, 1.0}) {
    out.push_back(ReservoirParams::anisotropic(d, 100.0));
  }
  return out;
}

SuiteResult oracle_agreement(const ValidationOptions& opts) {
  SuiteResult s{"oracle_agreement", false, 0.0, 1e-3, {}};
  const auto grid = TimeGrid::uniform(10.0, 200);
  for (const auto& p : oracle_parameter_sets()) {
    double dev = kInf;
    try {
      const auto closed = reservoir::amplitude(p, grid);
      const auto kernel =
          volterra::with_phase_offset(volterra::kernel_for(p), opts.kernel_phase_offset);
      const auto oracle = volterra::solve(kernel, grid);
      dev = 0.0;
      for (std::size_t k = 0; k < grid.size(); ++k) {
        dev = std::max(dev, std::abs(closed.q[k] - oracle.q[k]));
      }
    } catch (const Error&) {
    }
    s.cases.emplace_back(case_label(p), dev);
  }
  finish(s);
  return s;
}

// Mean of |q|^2 over t in [50, 60] against the residue value. The window
// averages out the beat between the bound state and the slowly decaying
// cut contribution.
SuiteResult long_time() {
  SuiteResult s{"long_time_population", false, 0.0, 1e-3, {}};
  std::vector<ReservoirParams> sets;
  for (double d : {-10.0, -5.0, 0.0, 1.0, 5.0}) {
    sets.push_back(ReservoirParams::isotropic(d));
  }
  for (double d : {-1.0, -0.2, 0.0}) {
    sets.push_back(ReservoirParams::anisotropic(d, 100.0));
  }
  constexpr int kSamples = 200;
  for (const auto& p : sets) {
    double dev = kInf;
    try {
      const auto roots = reservoir::find_roots(p);
      double mean = 0.0;
      for (int k = 0; k <= kSamples; ++k) {
        const double w = (k == 0 || k == kSamples) ? 0.5 : 1.0;
        const double t = 50.0 + 10.0 * k / kSamples;
        mean += w * std::norm(reservoir::closed_form_amplitude(p, roots, t));
      }
      mean /= kSamples;
      dev = std::abs(mean - reservoir::steady_population(p));
    } catch (const Error&) {
    }
    s.cases.emplace_back(case_label(p), dev);
  }
  finish(s);
  return s;
}

SuiteResult markov_limit(const ValidationOptions& opts) {
  SuiteResult s{"markov_limit", false, 0.0, 1e-8, {}};
  const auto p = ReservoirParams::free_space();
  const auto grid = TimeGrid::uniform(10.0, 200);
  auto deviation = [&](const AmplitudeSeries& a) {
    double dev = 0.0;
    for (std::size_t k = 0; k < grid.size(); ++k) {
      dev = std::max(dev, std::abs(a.population[k] - std::exp(-p.beta() * grid.at(k))));
    }
    return dev;
  };
  s.cases.emplace_back("closed_form", deviation(reservoir::amplitude(p, grid)));
  double dev = kInf;
  try {
    dev = deviation(volterra::solve(
        volterra::with_phase_offset(volterra::kernel_for(p), opts.kernel_phase_offset),
        grid));
  } catch (const Error&) {
  }
  s.cases.emplace_back("volterra", dev);
  finish(s);
  return s;
}

SuiteResult squeezing_reduction() {
  SuiteResult s{"squeezing_reduction", false, 0.0, 1e-8, {}};
  for (int n = 2; n <= 6; ++n) {
    double dev = 0.0;
    for (double frac : {0.05, 0.15, 0.3}) {
      const double theta = frac * std::numbers::pi;
      const auto m0 = squeezing::initial_moments(n, theta);
      for (double p : {0.25, 0.5, 0.75, 1.0}) {
        const double closed = squeezing::xi_squared(squeezing::evolved_moments(m0, p), n).xi2;
        const double brute = squeezing::brute_force_xi(n, theta, p).xi2;
        dev = std::max(dev, std::abs(closed - brute));
      }
    }
    s.cases.emplace_back("N=" + std::to_string(n), dev);
  }
  finish(s);
  return s;
}

SuiteResult channel_completeness() {
  SuiteResult s{"channel_completeness", false, 0.0, 1e-14, {}};
  double dev = 0.0;
  for (int i = 0; i <= 1000; ++i) {
    dev = std::max(dev, channel::completeness_defect(channel::kraus(i / 1000.0)));
  }
  s.cases.emplace_back("p in [0,1], 1001 points", dev);
  finish(s);
  return s;
}

}  // namespace

std::vector<TimeSeriesRow> run_timeseries(const ReservoirParams& r,
                                          const EnsembleParams& e,
                                          const TimeGrid& g) {
  const auto amp = reservoir::amplitude(r, g);
  const auto m0 = squeezing::initial_moments(e);
  std::vector<TimeSeriesRow> rows;
  rows.reserve(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) {
    TimeSeriesRow row;
    row.t = g.at(k);
    row.population = amp.population[k];
    if (auto v = squeezing::try_xi_squared(squeezing::evolved_moments(m0, row.population),
                                           e.n_atoms())) {
      row.xi2 = v->xi2;
      row.zeta2 = v->zeta2;
    }
    rows.push_back(row);
  }
  return rows;
}

std::vector<double> detuning_grid(double lo, double hi, int n_points) {
  if (n_points < 2) {
    throw ParameterError("invalid value for 'n_points': " + std::to_string(n_points) +
                         " (must be >= 2)");
  }
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw ParameterError("invalid detuning range [" + fmt(lo) + ", " + fmt(hi) +
                         "] (need finite lo < hi)");
  }
  std::vector<double> out(static_cast<std::size_t>(n_points));
  for (int i = 0; i < n_points; ++i) {
    out[static_cast<std::size_t>(i)] =
        i + 1 == n_points ? hi : lo + (hi - lo) * i / (n_points - 1);
  }
  return out;
}

std::vector<SweepRow> run_sweep(const ReservoirParams& r_template,
                                const EnsembleParams& e, double delta_lo,
                                double delta_hi, int n_points) {
  const auto m0 = squeezing::initial_moments(e);
  std::vector<SweepRow> rows;
  for (double d : detuning_grid(delta_lo, delta_hi, n_points)) {
    const auto p = r_template.with_delta(d);
    SweepRow row;
    row.delta = d;
    row.bound_state_present = reservoir::bound_state_present(p);
    row.steady_population = row.bound_state_present ? reservoir::steady_population(p) : 0.0;
    if (row.bound_state_present) {
      const auto v = squeezing::xi_squared(
          squeezing::evolved_moments(m0, row.steady_population), e.n_atoms());
      row.zeta2_inf = v.zeta2;
    }
    rows.push_back(row);
  }
  return rows;
}

SweepDefaults default_sweep_range(Model model) {
  if (model == Model::Anisotropic) return {-1.0, 1.0, 400};
  return {-10.0, 10.0, 400};
}

double locate_transition(const ReservoirParams& r_template, const EnsembleParams&,
                         double lo, double hi, double width) {
  if (r_template.model() != Model::Anisotropic) {
    throw ParameterError("transition search requires the anisotropic model, got " +
                         std::string(to_string(r_template.model())));
  }
  if (!(lo < hi)) {
    throw ParameterError("invalid bracket [" + fmt(lo) + ", " + fmt(hi) + "]");
  }
  if (!reservoir::bound_state_present(r_template.with_delta(lo))) {
    throw ParameterError("no bound state at bracket start delta=" + fmt(lo));
  }
  if (reservoir::bound_state_present(r_template.with_delta(hi))) {
    throw ParameterError("bound state still present at bracket end delta=" + fmt(hi));
  }
  while (hi - lo > width) {
    const double mid = 0.5 * (lo + hi);
    if (reservoir::bound_state_present(r_template.with_delta(mid))) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

bool ValidationReport::passed() const {
  return std::all_of(suites.begin(), suites.end(),
                     [](const SuiteResult& s) { return s.passed; });
}

std::string ValidationReport::to_json() const {
  auto num = [](double v) -> nlohmann::json {
    if (std::isfinite(v)) return v;
    return nullptr;
  };
  nlohmann::json j;
  j["passed"] = passed();
  j["suites"] = nlohmann::json::array();
  for (const auto& s : suites) {
    nlohmann::json cases = nlohmann::json::array();
    for (const auto& [name, dev] : s.cases) {
      cases.push_back({{"case", name}, {"deviation", num(dev)}});
    }
    j["suites"].push_back({{"name", s.name},
                           {"passed", s.passed},
                           {"max_deviation", num(s.max_deviation)},
                           {"tolerance", s.tolerance},
                           {"cases", cases}});
  }
  return j.dump(2);
}

ValidationReport run_validation(const ValidationOptions& opts) {
  ValidationReport r;
  r.suites.push_back(oracle_agreement(opts));
  r.suites.push_back(long_time());
  r.suites.push_back(markov_limit(opts));
  r.suites.push_back(squeezing_reduction());
  r.suites.push_back(channel_completeness());
  return r;
}

}  // namespace pcsq::experiments
