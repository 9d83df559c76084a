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

// Acceptance checks. One line per criterion; exit status is non-zero when
// any of them fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>

#include "pcsqueeze/channel.hpp"
#include "pcsqueeze/experiments.hpp"
#include "pcsqueeze/reservoir.hpp"
#include "pcsqueeze/squeezing.hpp"
#include "pcsqueeze/volterra.hpp"

using namespace pcsq;

namespace {

constexpr double kPi = std::numbers::pi;

struct Verdict {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Verdict squeezing_vs_brute_force() {
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (int n = 2; n <= 10; ++n) {
    for (double frac : {0.05, 0.15, 0.3}) {
      const auto m0 = squeezing::initial_moments(n, frac * kPi);
      for (double p : {0.25, 0.5, 0.75, 1.0}) {
        const double closed = squeezing::xi_squared(squeezing::evolved_moments(m0, p), n).xi2;
        const double brute = squeezing::brute_force_xi(n, frac * kPi, p).xi2;
        worst = std::max(worst, std::abs(closed - brute));
      }
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {worst <= 1e-8 && secs < 60.0, fmt("max |dxi2| = %.2e, %.1f s", worst, secs)};
}

Verdict channel_reduction() {
  double worst = 0.0;
  for (int n = 2; n <= 10; ++n) {
    for (double frac : {0.05, 0.15, 0.3}) {
      const double theta = frac * kPi;
      const channel::DensityMatrix pair(
          squeezing::reduced_pair(squeezing::twisted_state(n, theta), n));
      const auto m0 = squeezing::initial_moments(n, theta);
      for (double p : {0.25, 0.5, 0.75, 1.0}) {
        const auto m = squeezing::pair_correlators(
            Eigen::Matrix4cd(channel::apply_product(pair, channel::kraus(p), 2).matrix()));
        const auto ref = squeezing::evolved_moments(m0, p);
        worst = std::max({worst, std::abs(m.sz - ref.sz), std::abs(m.spm - ref.spm),
                          std::abs(m.smm - ref.smm)});
      }
    }
  }
  return {worst <= 1e-10, fmt("max moment deviation = %.2e", worst)};
}

Verdict cptp() {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    worst = std::max(worst, channel::completeness_defect(channel::kraus(u(rng))));
  }
  return {worst <= 1e-14, fmt("max completeness defect = %.2e over 1000 draws", worst)};
}

Verdict oracle_agreement() {
  const auto start = std::chrono::steady_clock::now();
  const auto grid = TimeGrid::uniform(10.0, 200);
  std::vector<ReservoirParams> sets;
  for (double d : {-10.0, -5.0, 0.0, 1.0, 5.0}) sets.push_back(ReservoirParams::isotropic(d));
  for (double d : {-1.0, -0.2, 0.0, 0.2, 1.0}) sets.push_back(ReservoirParams::anisotropic(d, 100.0));
  double worst = 0.0;
  for (const auto& p : sets) {
    const auto closed = reservoir::amplitude(p, grid);
    const auto oracle = volterra::solve(p, grid);
    for (std::size_t k = 0; k < grid.size(); ++k) {
      worst = std::max(worst, std::abs(closed.q[k] - oracle.q[k]));
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {worst <= 1e-3 && secs < 300.0, fmt("sup |q_closed - q_oracle| = %.2e, %.1f s", worst, secs)};
}

double zeta_inf(const ReservoirParams& p, const EnsembleParams& e) {
  if (!reservoir::bound_state_present(p)) return 0.0;
  const auto m = squeezing::evolved_moments(squeezing::initial_moments(e),
                                            reservoir::steady_population(p));
  return squeezing::xi_squared(m, e.n_atoms()).zeta2;
}

Verdict isotropic_evolution() {
  const auto e = EnsembleParams::make(10, 0.15 * kPi);
  const double zeta0 = squeezing::brute_force_xi(e, 1.0).zeta2;
  const double z10 = zeta_inf(ReservoirParams::isotropic(-10.0), e);
  const double z5 = zeta_inf(ReservoirParams::isotropic(-5.0), e);
  const auto rows =
      experiments::run_timeseries(ReservoirParams::isotropic(5.0), e, TimeGrid::uniform(10.0, 200));
  const double late = *rows.back().zeta2;
  const bool ok = std::abs(zeta0 - 0.67) <= 0.01 && z10 > z5 && z5 > 0.0 && late < 0.01;
  return {ok, fmt("zeta2(0) = %.4f, zeta2_inf(-10) = %.4f > zeta2_inf(-5) = %.4f, zeta2(10; +5) = %.2e",
                  zeta0, z10, z5, late)};
}

Verdict isotropic_sweep() {
  const auto e = EnsembleParams::make(10, 0.15 * kPi);
  const auto d = experiments::default_sweep_range(Model::Isotropic);
  const auto rows = experiments::run_sweep(ReservoirParams::isotropic(0.0), e, d.lo, d.hi, d.n_points);
  double worst_rise = 0.0;
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    worst_rise = std::max(worst_rise, rows[i + 1].zeta2_inf - rows[i].zeta2_inf);
  }
  const double z1 = zeta_inf(ReservoirParams::isotropic(1.0), e);
  const double z5 = zeta_inf(ReservoirParams::isotropic(5.0), e);
  const bool ok = worst_rise <= 1e-9 && z1 > 0.0 && z5 > 0.0;
  return {ok, fmt("largest increase = %.2e over %zu points, zeta2_inf(+1) = %.4f, zeta2_inf(+5) = %.2e",
                  worst_rise, rows.size(), z1, z5)};
}

Verdict anisotropic_transition() {
  const auto e = EnsembleParams::make(10, 0.15 * kPi);
  const auto tmpl = ReservoirParams::anisotropic(0.0, 100.0);
  const double star = experiments::locate_transition(tmpl, e, 0.0, 0.2);
  double above = 0.0;
  for (int i = 1; i <= 50; ++i) {
    const double d = star + 1e-4 + (1.0 - star) * i / 50.0;
    above = std::max(above, zeta_inf(tmpl.with_delta(std::min(d, 1.0)), e));
  }
  above = std::max(above, zeta_inf(tmpl.with_delta(star + 1e-4), e));
  const double below = zeta_inf(tmpl.with_delta(star - 0.05), e);
  const bool ok = star >= 0.05 && star <= 0.15 && above == 0.0 && below >= 0.3;
  return {ok, fmt("delta* = %.5f, max zeta2_inf above = %g, zeta2_inf(delta* - 0.05) = %.4f", star,
                  above, below)};
}

Verdict markov_limit() {
  const auto p = ReservoirParams::free_space();
  const auto grid = TimeGrid::uniform(10.0, 200);
  const auto closed = reservoir::amplitude(p, grid);
  const auto oracle = volterra::solve(p, grid);
  double c = 0.0, v = 0.0;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double ref = std::exp(-grid.at(k));
    c = std::max(c, std::abs(closed.population[k] - ref));
    v = std::max(v, std::abs(oracle.population[k] - ref));
  }
  return {c <= 1e-8 && v <= 1e-8, fmt("closed form %.2e, memory solver %.2e", c, v)};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Verdict()>> criteria[] = {
      {"closed-form squeezing vs brute force", squeezing_vs_brute_force},
      {"channel reduction of two-qubit moments", channel_reduction},
      {"Kraus completeness", cptp},
      {"closed-form amplitude vs memory-equation oracle", oracle_agreement},
      {"isotropic time evolution", isotropic_evolution},
      {"isotropic asymptotic sweep", isotropic_sweep},
      {"anisotropic sudden transition", anisotropic_transition},
      {"Markovian limit", markov_limit},
  };
  int failures = 0;
  int index = 1;
  for (const auto& [name, check] : criteria) {
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v = {false, std::string("threw: ") + e.what()};
    }
    std::printf("criterion %d %s: %s (%s)\n", index++, v.pass ? "PASS" : "FAIL", name, v.detail.c_str());
    std::fflush(stdout);
    if (!v.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
