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

#include <cmath>
#include <numbers>
#include <sstream>

#include "doctest.h"
#include "pcsqueeze/csv.hpp"
#include "pcsqueeze/error.hpp"
#include "pcsqueeze/experiments.hpp"
#include "pcsqueeze/reservoir.hpp"
#include "pcsqueeze/squeezing.hpp"

using namespace pcsq;
using namespace pcsq::experiments;

namespace {

const auto kDefaultEnsemble = EnsembleParams::make(10, 0.15 * std::numbers::pi);

}  // namespace

TEST_CASE("timeseries rows") {
  const auto grid = TimeGrid::uniform(10.0, 100);
  for (const auto& r : {ReservoirParams::isotropic(-5.0), ReservoirParams::anisotropic(0.2, 100.0),
                        ReservoirParams::free_space()}) {
    const auto rows = run_timeseries(r, kDefaultEnsemble, grid);
    REQUIRE(rows.size() == grid.size());
    const auto init = squeezing::xi_squared(squeezing::initial_moments(kDefaultEnsemble), 10);
    CHECK(rows[0].t == 0.0);
    CHECK(*rows[0].zeta2 == doctest::Approx(init.zeta2).epsilon(1e-12));
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k) CHECK(rows[k].t >= rows[k - 1].t);
      CHECK(rows[k].population >= 0.0);
      CHECK(rows[k].population <= 1.0);
      REQUIRE(rows[k].zeta2.has_value());
      CHECK(*rows[k].zeta2 == std::max(0.0, 1.0 - *rows[k].xi2));
    }
  }
}

TEST_CASE("far above the band edge squeezing decays away") {
  const auto rows =
      run_timeseries(ReservoirParams::isotropic(5.0), kDefaultEnsemble, TimeGrid::uniform(10.0, 200));
  CHECK(*rows.back().zeta2 < 0.01);
}

namespace {

int turning_points(const std::vector<TimeSeriesRow>& rows) {
  int n = 0;
  for (std::size_t k = 1; k + 1 < rows.size(); ++k) {
    const double l = *rows[k].zeta2 - *rows[k - 1].zeta2;
    const double r = *rows[k + 1].zeta2 - *rows[k].zeta2;
    if (l * r < 0) ++n;
  }
  return n;
}

double late_swing(const std::vector<TimeSeriesRow>& rows, double from) {
  double lo = 1.0, hi = 0.0;
  for (const auto& r : rows) {
    if (r.t < from) continue;
    lo = std::min(lo, *r.zeta2);
    hi = std::max(hi, *r.zeta2);
  }
  return hi - lo;
}

}  // namespace

// The anisotropic plateau carries a slow ripple of order 1e-3, reproduced by
// the memory-equation oracle. It is compared with the rapid isotropic
// deep-gap oscillations.
TEST_CASE("anisotropic deep detuning settles without quasi-oscillations") {
  const auto grid = TimeGrid::uniform(10.0, 200);
  const auto aniso = run_timeseries(ReservoirParams::anisotropic(-1.0, 100.0), kDefaultEnsemble, grid);
  const auto iso = run_timeseries(ReservoirParams::isotropic(-10.0), kDefaultEnsemble, grid);
  CHECK(*aniso.back().zeta2 > 0.5);
  CHECK(late_swing(aniso, 1.0) < 5e-3);
  CHECK(turning_points(aniso) <= 4);
  CHECK(turning_points(iso) >= 10);
  CHECK(late_swing(iso, 1.0) > 3.0 * late_swing(aniso, 1.0));
}

TEST_CASE("detuning grid") {
  const auto g = detuning_grid(-1.0, 1.0, 5);
  CHECK(g == std::vector<double>{-1.0, -0.5, 0.0, 0.5, 1.0});
  CHECK_THROWS_AS(detuning_grid(0.0, 1.0, 1), ParameterError);
  CHECK_THROWS_AS(detuning_grid(1.0, 1.0, 4), ParameterError);
}

TEST_CASE("isotropic sweep is monotone and positive above the edge") {
  const auto rows = run_sweep(ReservoirParams::isotropic(0.0), kDefaultEnsemble, -10.0, 10.0, 201);
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    CHECK(rows[i].zeta2_inf >= rows[i + 1].zeta2_inf - 1e-9);
  }
  for (const auto& r : rows) {
    CHECK(r.bound_state_present);
    CHECK(r.zeta2_inf >= 0.0);
    CHECK(r.zeta2_inf <= 1.0);
    if (r.delta == 5.0) CHECK(r.steady_population > 0.0);
  }
}

TEST_CASE("anisotropic sweep couples zero squeezing to missing bound state") {
  const auto rows = run_sweep(ReservoirParams::anisotropic(0.0, 100.0), kDefaultEnsemble, -1.0, 1.0, 81);
  for (const auto& r : rows) {
    CHECK((r.zeta2_inf == 0.0) == !r.bound_state_present);
    if (r.delta == 1.0) CHECK(r.zeta2_inf == 0.0);
  }
  const auto d = default_sweep_range(Model::Anisotropic);
  CHECK(d.lo == -1.0);
  CHECK(d.hi == 1.0);
  CHECK(d.n_points == 400);
}

TEST_CASE("transition location") {
  const auto t100 = locate_transition(ReservoirParams::anisotropic(0.0, 100.0), kDefaultEnsemble, 0.0, 0.2);
  CHECK(t100 == doctest::Approx(0.1).epsilon(0.5));
  CHECK(reservoir::bound_state_present(ReservoirParams::anisotropic(t100 - 1e-4, 100.0)));
  CHECK_FALSE(reservoir::bound_state_present(ReservoirParams::anisotropic(t100 + 1e-4, 100.0)));

  const auto t1000 = locate_transition(ReservoirParams::anisotropic(0.0, 1000.0), kDefaultEnsemble, 0.0, 0.2);
  CHECK(t1000 < t100);
  CHECK(t1000 > 0.0);

  CHECK_THROWS_AS(locate_transition(ReservoirParams::isotropic(0.0), kDefaultEnsemble, 0.0, 0.2),
                  ParameterError);
  CHECK_THROWS_AS(locate_transition(ReservoirParams::anisotropic(0.0, 100.0), kDefaultEnsemble, 0.15, 0.2),
                  ParameterError);
  CHECK_THROWS_AS(locate_transition(ReservoirParams::anisotropic(0.0, 100.0), kDefaultEnsemble, -0.2, 0.05),
                  ParameterError);
}

TEST_CASE("validation report") {
  const auto clean = run_validation();
  CHECK(clean.passed());
  bool has_oracle = false;
  for (const auto& s : clean.suites) {
    CHECK(s.passed);
    CHECK_FALSE(s.cases.empty());
    if (s.name == "oracle_agreement") {
      has_oracle = true;
      CHECK(s.cases.size() == 10);
      CHECK(s.max_deviation <= 1e-3);
    }
  }
  CHECK(has_oracle);
  CHECK(clean.to_json().find("\"max_deviation\"") != std::string::npos);
}

TEST_CASE("kernel phase fault is caught by the oracle suite") {
  const auto faulty = run_validation({std::numbers::pi / 2});
  CHECK_FALSE(faulty.passed());
  for (const auto& s : faulty.suites) {
    if (s.name == "oracle_agreement") CHECK_FALSE(s.passed);
  }
}

TEST_CASE("csv layout") {
  std::ostringstream ts;
  csv::write_timeseries(ts, {{0.0, 1.0, 0.25, 0.75}, {0.5, 0.5, std::nullopt, std::nullopt}});
  CHECK(ts.str() ==
        "# pcsqueeze timeseries v1\nt,population,xi2,zeta2\n0,1,0.25,0.75\n0.5,0.5,,\n");

  std::ostringstream sw;
  csv::write_sweep(sw, {{-1.0, 0.9, 0.6, true}, {1.0, 0.0, 0.0, false}});
  CHECK(sw.str() ==
        "# pcsqueeze sweep v1\ndelta,steady_population,zeta2_inf,bound_state\n-1,0.9,0.6,1\n1,0,0,0\n");
}

TEST_CASE("csv round trip and determinism") {
  const auto rows =
      run_timeseries(ReservoirParams::isotropic(1.0), kDefaultEnsemble, TimeGrid::uniform(10.0, 50));
  std::ostringstream a, b;
  csv::write_timeseries(a, rows);
  csv::write_timeseries(b, run_timeseries(ReservoirParams::isotropic(1.0), kDefaultEnsemble,
                                          TimeGrid::uniform(10.0, 50)));
  CHECK(a.str() == b.str());

  std::istringstream in(a.str());
  const auto back = csv::read_timeseries(in);
  REQUIRE(back.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(back[i].t == rows[i].t);
    CHECK(back[i].population == rows[i].population);
    CHECK(back[i].xi2 == rows[i].xi2);
  }

  const auto sweep = run_sweep(ReservoirParams::anisotropic(0.0, 100.0), kDefaultEnsemble, -1.0, 1.0, 21);
  std::ostringstream s;
  csv::write_sweep(s, sweep);
  std::istringstream sin(s.str());
  const auto sback = csv::read_sweep(sin);
  REQUIRE(sback.size() == sweep.size());
  for (std::size_t i = 0; i < sweep.size(); ++i) {
    CHECK(sback[i].zeta2_inf == sweep[i].zeta2_inf);
    CHECK(sback[i].bound_state_present == sweep[i].bound_state_present);
  }
}

TEST_CASE("csv reader rejects a different schema") {
  std::istringstream wrong("# pcsqueeze sweep v1\nt,population,xi2,zeta2\n");
  CHECK_THROWS_AS(csv::read_timeseries(wrong), ParameterError);
  std::istringstream fields("# pcsqueeze timeseries v1\nt,population,xi2,zeta2\n0,1,2\n");
  CHECK_THROWS_AS(csv::read_timeseries(fields), ParameterError);
}
