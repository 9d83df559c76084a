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

#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "pcsqueeze/csv.hpp"
#include "pcsqueeze/error.hpp"
#include "pcsqueeze/experiments.hpp"
#include "pcsqueeze/params.hpp"

namespace pcsq::cli {

namespace {

struct Common {
  std::string config_path;
  std::string out_path;
  // CLI flag -> config key
  std::vector<std::pair<std::string, std::optional<std::string>>> overrides{
      {"model", {}},   {"delta", {}}, {"beta", {}},  {"omega_c", {}},
      {"n_atoms", {}}, {"theta", {}}, {"t_max", {}}, {"n_steps", {}}};
};

struct Range {
  std::optional<double> lo;
  std::optional<double> hi;
  std::optional<int> n_points;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--config", c.config_path, "key = value parameter file");
  app->add_option("--out", c.out_path, "output file (default: stdout)");
  for (auto& [key, value] : c.overrides) {
    std::string flag = "--" + key;
    for (auto& ch : flag) {
      if (ch == '_') ch = '-';
    }
    app->add_option(flag, value, "override '" + key + "'");
  }
}

void add_range(CLI::App* app, Range& r) {
  app->add_option("--delta-lo", r.lo, "lower detuning");
  app->add_option("--delta-hi", r.hi, "upper detuning");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot read config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Config load_config(const Common& c) {
  KeyValues kv;
  if (!c.config_path.empty()) kv = parse_key_values(read_file(c.config_path));
  for (const auto& [key, value] : c.overrides) {
    if (value) kv[key] = *value;
  }
  return config_from_key_values(kv);
}

template <typename Fn>
void emit(const Common& c, std::ostream& out, Fn write) {
  if (c.out_path.empty()) {
    write(out);
    return;
  }
  std::ofstream file(c.out_path, std::ios::binary);
  if (!file) throw ParameterError("cannot open output file '" + c.out_path + "'");
  write(file);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spin squeezing of atoms in photonic-crystal reservoirs"};
  app.require_subcommand(1);

  Common ts_opts, sw_opts, tr_opts, va_opts;
  Range sw_range, tr_range;
  double phase_offset = 0.0;

  auto* ts = app.add_subcommand("timeseries", "population and squeezing versus time");
  add_common(ts, ts_opts);

  auto* sw = app.add_subcommand("sweep", "asymptotic squeezing versus detuning");
  add_common(sw, sw_opts);
  add_range(sw, sw_range);
  sw->add_option("--n-points", sw_range.n_points, "number of detunings");

  auto* tr = app.add_subcommand("transition", "locate the bound-state threshold");
  add_common(tr, tr_opts);
  add_range(tr, tr_range);

  auto* va = app.add_subcommand("validate", "run the oracle-agreement suites");
  add_common(va, va_opts);
  va->add_option("--kernel-phase-offset", phase_offset,
                 "phase added to the memory kernel (fault injection)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParameterError;
  }

  try {
    if (ts->parsed()) {
      const auto cfg = load_config(ts_opts);
      const auto rows = experiments::run_timeseries(cfg.reservoir, cfg.ensemble, cfg.grid);
      emit(ts_opts, out, [&](std::ostream& o) { csv::write_timeseries(o, rows); });
    } else if (sw->parsed()) {
      const auto cfg = load_config(sw_opts);
      const auto d = experiments::default_sweep_range(cfg.reservoir.model());
      const auto rows = experiments::run_sweep(
          cfg.reservoir, cfg.ensemble, sw_range.lo.value_or(d.lo),
          sw_range.hi.value_or(d.hi), sw_range.n_points.value_or(d.n_points));
      emit(sw_opts, out, [&](std::ostream& o) { csv::write_sweep(o, rows); });
    } else if (tr->parsed()) {
      const auto cfg = load_config(tr_opts);
      const double star = experiments::locate_transition(
          cfg.reservoir, cfg.ensemble, tr_range.lo.value_or(0.0), tr_range.hi.value_or(0.2));
      emit(tr_opts, out,
           [&](std::ostream& o) { o << "delta_star," << csv::format_number(star) << '\n'; });
    } else if (va->parsed()) {
      const auto report = experiments::run_validation({phase_offset});
      emit(va_opts, out, [&](std::ostream& o) { o << report.to_json() << '\n'; });
      if (!report.passed()) {
        err << "validation failed\n";
        return kValidationFailure;
      }
    }
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kParameterError;
  } catch (const Error& e) {
    err << "numerical error: " << e.what() << '\n';
    return kNumericalError;
  }
  return kOk;
}

}  // namespace pcsq::cli
