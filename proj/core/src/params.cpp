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

#include "pcsqueeze/params.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>

#include "pcsqueeze/error.hpp"

namespace pcsq {
namespace {

std::string format_number(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  (void)ec;
  return std::string(buf, end);
}

[[noreturn]] void out_of_domain(std::string_view key, double value,
                                std::string_view requirement) {
  std::ostringstream msg;
  msg << "invalid value for '" << key << "': " << format_number(value)
      << " (" << requirement << ")";
  throw ParameterError(msg.str());
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(std::string_view key, std::string_view text) {
  double value = 0.0;
  const auto* begin = text.data();
  const auto* end = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParameterError("invalid value for '" + std::string(key) + "': '" +
                         std::string(text) + "' is not a number");
  }
  return value;
}

int parse_int(std::string_view key, std::string_view text) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParameterError("invalid value for '" + std::string(key) + "': '" +
                         std::string(text) + "' is not an integer");
  }
  return value;
}

}  // namespace

std::string_view to_string(Model model) {
  switch (model) {
    case Model::Isotropic:
      return "isotropic";
    case Model::Anisotropic:
      return "anisotropic";
    case Model::FreeSpace:
      return "free_space";
  }
  return "unknown";
}

Model model_from_string(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "isotropic") return Model::Isotropic;
  if (lower == "anisotropic") return Model::Anisotropic;
  if (lower == "free_space" || lower == "freespace" || lower == "free-space")
    return Model::FreeSpace;
  throw ParameterError("invalid value for 'model': '" + std::string(text) +
                       "' (expected isotropic, anisotropic or free_space)");
}

ReservoirParams ReservoirParams::make(Model model, double delta, double beta,
                                      std::optional<double> omega_c) {
  if (!std::isfinite(beta) || beta <= 0.0) out_of_domain("beta", beta, "must be > 0");
  if (!std::isfinite(delta)) out_of_domain("delta", delta, "must be finite");
  if (model != Model::Anisotropic) return {model, delta, beta, std::nullopt};

  if (!omega_c) throw ParameterError("missing required key 'omega_c' for model anisotropic");
  if (!std::isfinite(*omega_c) || *omega_c <= 0.0)
    out_of_domain("omega_c", *omega_c, "must be > 0");
  if (std::abs(delta) > *omega_c)
    out_of_domain("delta", delta, "|delta| must not exceed omega_c");
  return {model, delta, beta, omega_c};
}

ReservoirParams ReservoirParams::isotropic(double delta, double beta) {
  return make(Model::Isotropic, delta, beta, std::nullopt);
}

ReservoirParams ReservoirParams::anisotropic(double delta, double omega_c,
                                             double beta) {
  return make(Model::Anisotropic, delta, beta, omega_c);
}

ReservoirParams ReservoirParams::free_space(double beta) {
  return make(Model::FreeSpace, 0.0, beta, std::nullopt);
}

double ReservoirParams::coupling() const { return beta_ * std::sqrt(beta_); }

ReservoirParams ReservoirParams::with_delta(double delta) const {
  return make(model_, delta, beta_, omega_c_);
}

EnsembleParams EnsembleParams::make(int n_atoms, double theta) {
  if (n_atoms < 2)
    out_of_domain("n_atoms", n_atoms, "at least two atoms are required");
  if (!(theta > 0.0 && theta < std::numbers::pi))
    out_of_domain("theta", theta, "must lie strictly inside (0, pi)");
  return {n_atoms, theta};
}

TimeGrid TimeGrid::uniform(double t_max, int n_steps) {
  if (!std::isfinite(t_max) || t_max <= 0.0) out_of_domain("t_max", t_max, "must be > 0");
  if (n_steps < 2) out_of_domain("n_steps", n_steps, "must be >= 2");
  return {t_max, n_steps};
}

double TimeGrid::at(std::size_t k) const {
  if (k + 1 == size()) return t_max_;
  return static_cast<double>(k) * t_max_ / n_steps_;
}

std::vector<double> TimeGrid::times() const {
  std::vector<double> out(size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = at(k);
  return out;
}

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = {
      "model", "delta", "beta", "omega_c", "n_atoms", "theta", "t_max", "n_steps"};
  return keys;
}

KeyValues parse_key_values(std::string_view text) {
  KeyValues out;
  const auto& known = config_keys();
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParameterError("line " + std::to_string(line_no) +
                           ": expected 'key = value', got '" + std::string(line) + "'");
    }
    const auto key = std::string(trim(line.substr(0, eq)));
    const auto value = std::string(trim(line.substr(eq + 1)));
    if (std::find(known.begin(), known.end(), key) == known.end())
      throw ParameterError("unknown key '" + key + "' (value '" + value + "')");
    if (value.empty()) throw ParameterError("empty value for key '" + key + "'");
    if (!out.emplace(key, value).second)
      throw ParameterError("duplicate key '" + key + "'");
  }
  return out;
}

Config config_from_key_values(const KeyValues& values) {
  const auto& known = config_keys();
  for (const auto& [key, value] : values) {
    if (std::find(known.begin(), known.end(), key) == known.end())
      throw ParameterError("unknown key '" + key + "' (value '" + value + "')");
  }
  auto lookup = [&](std::string_view key) -> std::optional<std::string_view> {
    if (auto it = values.find(key); it != values.end()) return it->second;
    return std::nullopt;
  };
  auto number = [&](std::string_view key, double fallback) {
    auto v = lookup(key);
    return v ? parse_double(key, *v) : fallback;
  };

  const auto model_text = lookup("model");
  if (!model_text) throw ParameterError("missing required key 'model'");
  const Model model = model_from_string(*model_text);

  std::optional<double> omega_c;
  if (auto v = lookup("omega_c")) omega_c = parse_double("omega_c", *v);

  auto reservoir =
      ReservoirParams::make(model, number("delta", 0.0), number("beta", 1.0), omega_c);

  const int n_atoms = lookup("n_atoms") ? parse_int("n_atoms", *lookup("n_atoms"))
                                        : EnsembleParams::kDefaultAtoms;
  auto ensemble = EnsembleParams::make(n_atoms, number("theta", EnsembleParams::kDefaultTheta));

  const int n_steps = lookup("n_steps") ? parse_int("n_steps", *lookup("n_steps")) : 200;
  auto grid = TimeGrid::uniform(number("t_max", 10.0), n_steps);

  return {reservoir, ensemble, grid};
}

Config parse_config(std::string_view text) {
  return config_from_key_values(parse_key_values(text));
}

std::string serialize_config(const Config& config) {
  std::ostringstream out;
  const auto& r = config.reservoir;
  out << "model = " << to_string(r.model()) << '\n';
  out << "delta = " << format_number(r.delta()) << '\n';
  out << "beta = " << format_number(r.beta()) << '\n';
  if (r.omega_c()) out << "omega_c = " << format_number(*r.omega_c()) << '\n';
  out << "n_atoms = " << config.ensemble.n_atoms() << '\n';
  out << "theta = " << format_number(config.ensemble.theta()) << '\n';
  out << "t_max = " << format_number(config.grid.t_max()) << '\n';
  out << "n_steps = " << config.grid.n_steps() << '\n';
  return out.str();
}

}  // namespace pcsq
