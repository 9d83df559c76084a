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

// Parameter types shared by every module. All quantities are dimensionless:
// frequencies (delta, omega_c) are in units of the rate scale beta and times
// in units of 1/beta.

#include <cstddef>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pcsq {

enum class Model { Isotropic, Anisotropic, FreeSpace };

std::string_view to_string(Model model);

/// Accepts "isotropic", "anisotropic", "free_space" (also "freespace").
Model model_from_string(std::string_view text);

/// Reservoir description for a single atom + photonic-crystal cavity.
///
/// beta is the model's coupling rate scale; for free space it is the decay
/// rate. omega_c is only meaningful for the
/// anisotropic model, where it is required.
class ReservoirParams {
 public:
  static ReservoirParams isotropic(double delta, double beta = 1.0);
  static ReservoirParams anisotropic(double delta, double omega_c,
                                     double beta = 1.0);
  static ReservoirParams free_space(double beta = 1.0);

  /// Generic validating constructor. omega_c is ignored unless the model is
  /// anisotropic.
  static ReservoirParams make(Model model, double delta, double beta,
                              std::optional<double> omega_c);

  Model model() const { return model_; }
  double delta() const { return delta_; }
  double beta() const { return beta_; }
  /// Band-edge frequency; only set for the anisotropic model.
  std::optional<double> omega_c() const { return omega_c_; }

  /// beta^{3/2}, the coupling constant that enters every root equation.
  double coupling() const;

  ReservoirParams with_delta(double delta) const;

  bool operator==(const ReservoirParams&) const = default;

 private:
  ReservoirParams(Model model, double delta, double beta,
                  std::optional<double> omega_c)
      : model_(model), delta_(delta), beta_(beta), omega_c_(omega_c) {}

  Model model_;
  double delta_;
  double beta_;
  std::optional<double> omega_c_;
};

/// N atoms prepared in the one-axis twisted state with twisting angle theta.
class EnsembleParams {
 public:
  static constexpr int kDefaultAtoms = 10;
  static constexpr double kDefaultTheta = 0.15 * std::numbers::pi;

  static EnsembleParams make(int n_atoms, double theta);

  int n_atoms() const { return n_atoms_; }
  double theta() const { return theta_; }

  bool operator==(const EnsembleParams&) const = default;

 private:
  EnsembleParams(int n_atoms, double theta)
      : n_atoms_(n_atoms), theta_(theta) {}

  int n_atoms_;
  double theta_;
};

/// Uniform grid t_k = k * t_max / n_steps, k = 0..n_steps.
class TimeGrid {
 public:
  static TimeGrid uniform(double t_max, int n_steps);

  double t_max() const { return t_max_; }
  int n_steps() const { return n_steps_; }
  double spacing() const { return t_max_ / n_steps_; }
  std::size_t size() const { return static_cast<std::size_t>(n_steps_) + 1; }
  double at(std::size_t k) const;
  std::vector<double> times() const;

  bool operator==(const TimeGrid&) const = default;

 private:
  TimeGrid(double t_max, int n_steps) : t_max_(t_max), n_steps_(n_steps) {}

  double t_max_;
  int n_steps_;
};

struct Config {
  ReservoirParams reservoir;
  EnsembleParams ensemble;
  TimeGrid grid;

  bool operator==(const Config&) const = default;
};

using KeyValues = std::map<std::string, std::string, std::less<>>;

/// Keys accepted in config files and as CLI overrides.
const std::vector<std::string>& config_keys();

/// Splits a `key = value` document. Blank lines and `#` comments are
/// skipped. Throws ParameterError on malformed lines and on unknown or
/// repeated keys.
KeyValues parse_key_values(std::string_view text);

/// Builds and validates the parameter bundle, applying defaults for
/// optional keys. Required: model; omega_c when model = anisotropic.
Config config_from_key_values(const KeyValues& values);

Config parse_config(std::string_view text);

/// Inverse of parse_config: parse_config(serialize_config(c)) == c.
std::string serialize_config(const Config& config);

}  // namespace pcsq
