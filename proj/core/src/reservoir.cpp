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

#include "pcsqueeze/reservoir.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "pcsqueeze/error.hpp"

namespace pcsq::reservoir {
namespace {

constexpr cplx kI{0.0, 1.0};
constexpr double kResidualBound = 1e-10;
constexpr int kScanPoints = 1000;

void require_model(const ReservoirParams& p, Model model, const char* what) {
  if (p.model() != model) {
    throw ParameterError(std::string(what) + " requires the " +
                         std::string(to_string(model)) + " model");
  }
}

void require_structured(const ReservoirParams& p, const char* what) {
  if (p.model() == Model::FreeSpace)
    throw ParameterError(std::string(what) + " is undefined for the free_space model");
}

double band_edge_root(const ReservoirParams& p) { return std::sqrt(*p.omega_c()); }

// sqrt(arg) with a branch-point guard.
cplx guarded_sqrt(cplx arg, const ReservoirParams& p, const char* what) {
  if (std::abs(arg) <= 1e-14 * std::max(1.0, std::abs(p.delta()))) {
    std::ostringstream msg;
    msg << what << ": argument sits on the branch point (delta = " << p.delta() << ")";
    throw SingularInputError(msg.str());
  }
  return std::sqrt(arg);
}

// sqrt(-is - delta)
cplx physical_root(cplx s, const ReservoirParams& p, const char* what) {
  return guarded_sqrt(-kI * s - p.delta(), p, what);
}

// sqrt(is + delta)
cplx second_root(cplx s, const ReservoirParams& p, const char* what) {
  return guarded_sqrt(kI * s + p.delta(), p, what);
}

// Damped complex Newton iteration. Returns nullopt on failure.
template <class F, class DF>
std::optional<cplx> damped_newton(cplx y, F&& f, DF&& df) {
  cplx value;
  try {
    value = f(y);
  } catch (const SingularInputError&) {
    return std::nullopt;
  }
  for (int iter = 0; iter < 200; ++iter) {
    if (!std::isfinite(std::abs(value))) return std::nullopt;
    if (std::abs(value) <= 1e-15 * std::max(1.0, std::abs(y))) return y;
    cplx slope;
    try {
      slope = df(y);
    } catch (const SingularInputError&) {
      return std::nullopt;
    }
    if (std::abs(slope) == 0.0) return std::nullopt;
    const cplx step = value / slope;
    double lambda = 1.0;
    bool accepted = false;
    for (int halving = 0; halving < 40; ++halving, lambda *= 0.5) {
      const cplx trial = y - lambda * step;
      try {
        const cplx trial_value = f(trial);
        if (std::abs(trial_value) < std::abs(value)) {
          y = trial;
          value = trial_value;
          accepted = true;
          break;
        }
      } catch (const SingularInputError&) {
      }
    }
    if (!accepted) return std::abs(value) <= kResidualBound ? std::optional(y) : std::nullopt;
    if (std::abs(lambda * step) <= 1e-15 * std::max(1.0, std::abs(y))) return y;
  }
  return std::abs(value) <= kResidualBound ? std::optional(y) : std::nullopt;
}

bool in_propagating_region(cplx y, double delta) {
  return y.real() < 0.0 && y.imag() < delta;
}

}  // namespace

cplx eval_F(cplx x, const ReservoirParams& p) {
  require_model(p, Model::Isotropic, "eval_F");
  return x - kI * p.coupling() / physical_root(x, p, "eval_F");
}

cplx eval_F_derivative(cplx x, const ReservoirParams& p) {
  require_model(p, Model::Isotropic, "eval_F_derivative");
  const cplx r = physical_root(x, p, "eval_F_derivative");
  return 1.0 + 0.5 * p.coupling() / (r * r * r);
}

cplx eval_H(cplx y, const ReservoirParams& p) {
  require_model(p, Model::Isotropic, "eval_H");
  return y + p.coupling() / second_root(y, p, "eval_H");
}

cplx eval_H_derivative(cplx y, const ReservoirParams& p) {
  require_model(p, Model::Isotropic, "eval_H_derivative");
  const cplx r = second_root(y, p, "eval_H_derivative");
  return 1.0 - 0.5 * kI * p.coupling() / (r * r * r);
}

cplx eval_F_aniso(cplx x, const ReservoirParams& p) {
  require_model(p, Model::Anisotropic, "eval_F_aniso");
  return 1.0 - x * x / (2.0 * p.coupling() * physical_root(x, p, "eval_F_aniso"));
}

cplx eval_H_aniso(cplx y, const ReservoirParams& p) {
  require_model(p, Model::Anisotropic, "eval_H_aniso");
  return 1.0 - kI * y * y / (2.0 * p.coupling() * second_root(y, p, "eval_H_aniso"));
}

cplx aniso_localized_equation(cplx x, const ReservoirParams& p) {
  require_model(p, Model::Anisotropic, "aniso_localized_equation");
  const cplx r = physical_root(x, p, "aniso_localized_equation");
  return x - kI * p.coupling() / (band_edge_root(p) + r);
}

cplx aniso_localized_equation_derivative(cplx x, const ReservoirParams& p) {
  require_model(p, Model::Anisotropic, "aniso_localized_equation_derivative");
  const cplx r = physical_root(x, p, "aniso_localized_equation_derivative");
  const cplx d = band_edge_root(p) + r;
  return 1.0 + p.coupling() / (2.0 * r * d * d);
}

cplx aniso_propagating_equation(cplx y, const ReservoirParams& p) {
  require_model(p, Model::Anisotropic, "aniso_propagating_equation");
  const cplx r = second_root(y, p, "aniso_propagating_equation");
  return y - kI * p.coupling() / (band_edge_root(p) - kI * r);
}

cplx aniso_propagating_equation_derivative(cplx y, const ReservoirParams& p) {
  require_model(p, Model::Anisotropic, "aniso_propagating_equation_derivative");
  const cplx r = second_root(y, p, "aniso_propagating_equation_derivative");
  const cplx d = band_edge_root(p) - kI * r;
  return 1.0 + kI * p.coupling() / (2.0 * r * d * d);
}

cplx localized_denominator(cplx s, const ReservoirParams& p) {
  require_structured(p, "localized_denominator");
  return p.model() == Model::Isotropic ? eval_F(s, p) : aniso_localized_equation(s, p);
}

cplx localized_denominator_derivative(cplx s, const ReservoirParams& p) {
  require_structured(p, "localized_denominator_derivative");
  return p.model() == Model::Isotropic ? eval_F_derivative(s, p)
                                       : aniso_localized_equation_derivative(s, p);
}

cplx propagating_denominator(cplx s, const ReservoirParams& p) {
  require_structured(p, "propagating_denominator");
  return p.model() == Model::Isotropic ? eval_H(s, p) : aniso_propagating_equation(s, p);
}

cplx propagating_denominator_derivative(cplx s, const ReservoirParams& p) {
  require_structured(p, "propagating_denominator_derivative");
  return p.model() == Model::Isotropic ? eval_H_derivative(s, p)
                                       : aniso_propagating_equation_derivative(s, p);
}

LocalizedRoot find_localized_root(const ReservoirParams& p) {
  require_structured(p, "find_localized_root");
  const double b = p.coupling();
  const double delta = p.delta();
  const bool iso = p.model() == Model::Isotropic;
  const double c = iso ? 0.0 : band_edge_root(p);

  // On x = i(delta + v), v > 0, the denominator is i * phi(v) with phi
  // strictly increasing in v.
  auto phi = [&](double v) {
    return iso ? (v + delta) - b / std::sqrt(v) : (v + delta) - b / (c + std::sqrt(v));
  };

  // phi(v_hi) >= 0 by construction.
  const double v_hi = iso ? std::max(-delta, 0.0) + std::cbrt(b * b) : b / c - delta;
  if (!iso && v_hi <= 0.0) {
    return {std::nullopt, 0.0,
            "no sign change in bracket: delta >= beta^{3/2}/sqrt(omega_c)"};
  }

  double lo = 0.0;
  double hi = -1.0;
  for (int k = 1; k <= kScanPoints; ++k) {
    const double frac = static_cast<double>(k) / kScanPoints;
    const double v = k == kScanPoints ? v_hi : v_hi * frac * frac;
    if (phi(v) >= 0.0) {
      hi = v;
      break;
    }
    lo = v;
  }
  if (hi < 0.0) return {std::nullopt, 0.0, "no sign change in bracket"};

  // lo == 0 stands for v -> 0+, where phi < 0 (checked by the scan for the
  // anisotropic case; phi -> -inf for the isotropic one).
  if (!iso && lo == 0.0 && phi(0.0) >= 0.0)
    return {std::nullopt, 0.0, "no sign change in bracket"};

  for (int iter = 0; iter < 400; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double value = phi(mid);
    if (value == 0.0) {
      lo = hi = mid;
      break;
    }
    (value < 0.0 ? lo : hi) = mid;
    if (std::abs(value) <= 1e-14 * p.beta() && hi - lo <= 1e-15 * std::max(1.0, hi)) break;
  }
  const double v = std::abs(phi(lo)) < std::abs(phi(hi)) ? lo : hi;
  if (v <= 0.0) return {std::nullopt, 0.0, "bracket collapsed onto the branch point"};

  const cplx root{0.0, delta + v};
  const double residual = std::abs(localized_denominator(root, p));
  if (residual > kResidualBound) {
    std::ostringstream msg;
    msg << "bisection residual " << residual << " exceeds " << kResidualBound;
    return {std::nullopt, residual, msg.str()};
  }
  return {root, residual, {}};
}

RootSet find_roots(const ReservoirParams& p) {
  if (p.model() == Model::FreeSpace)
    throw ParameterError("find_roots requires the isotropic or anisotropic model");

  RootSet roots;
  roots.model = p.model();

  auto localized = find_localized_root(p);
  roots.localized = localized.root;
  roots.residual_localized = localized.root ? localized.residual : 0.0;
  roots.localized_reason = localized.reason;

  const double b = p.coupling();
  const double delta = p.delta();
  const bool iso = p.model() == Model::Isotropic;
  const double c = iso ? 0.0 : band_edge_root(p);

  // Weak-coupling seed: y = -G(0) evaluated at y = 0 on the second sheet.
  std::vector<cplx> seeds;
  if (delta != 0.0) {
    const cplx r0 = std::sqrt(cplx{delta, 0.0});
    seeds.push_back(iso ? -b / r0 : kI * b / (c - kI * r0));
  }
  const double scale = iso ? std::cbrt(b * b) : b / std::max(c, 1e-12);
  for (double radius : {0.3, 1.0, 3.0, 10.0}) {
    for (double angle : {1.1, 1.25, 1.4}) {
      seeds.push_back(kI * delta +
                      radius * scale * std::polar(1.0, angle * std::numbers::pi));
    }
  }

  auto f = [&](cplx y) { return propagating_denominator(y, p); };
  auto df = [&](cplx y) { return propagating_denominator_derivative(y, p); };
  bool converged_anywhere = false;
  for (const cplx& seed : seeds) {
    auto y = damped_newton(seed, f, df);
    if (!y) continue;
    converged_anywhere = true;
    if (!in_propagating_region(*y, delta)) continue;
    const double residual = std::abs(f(*y));
    if (residual > kResidualBound) continue;
    roots.propagating = *y;
    roots.residual_propagating = residual;
    break;
  }
  if (!roots.propagating) {
    roots.propagating_reason = converged_anywhere
                                   ? "Newton converged outside region Re(y)<0, Im(y)<delta"
                                   : "Newton did not converge from any seed";
  }
  return roots;
}

cplx diffusion_integrand(const ReservoirParams& p, double z) {
  require_structured(p, "diffusion_integrand");
  const double b = p.coupling();
  const double delta = p.delta();
  const double sqrt_z = std::sqrt(z);
  if (p.model() == Model::Isotropic) {
    const cplx den = kI * b * b - z * (kI * delta - z) * (kI * delta - z);
    return std::polar(1.0, -0.25 * std::numbers::pi) * b * sqrt_z / den /
           std::numbers::pi;
  }
  const double omega_c = *p.omega_c();
  const double c = std::sqrt(omega_c);
  const cplx bracket = (delta + kI * z) * (omega_c - kI * z) - c * b;
  const cplx den = kI * b * b * z - bracket * bracket;
  return std::polar(1.0, 0.25 * std::numbers::pi) * b * sqrt_z * (omega_c - kI * z) / den /
         std::numbers::pi;
}

namespace {

// A pole lying exactly on s = i delta - z makes the cut integrand singular.
void check_cut_path(const ReservoirParams& p) {
  const double b = p.coupling();
  const double delta = p.delta();
  double z_star = -1.0;
  double scale = 1.0;
  if (p.model() == Model::Isotropic) {
    if (delta < 0.0) {
      z_star = -delta;
      scale = b * b + z_star * z_star * z_star;
    }
  } else {
    const double gap = *p.omega_c() - delta;
    if (gap > 0.0) {
      z_star = b * b / (2.0 * gap * gap);
      scale = b * b * z_star + std::pow(std::abs(delta * *p.omega_c()) + b * band_edge_root(p), 2);
    }
  }
  if (z_star <= 0.0) return;
  cplx den;
  if (p.model() == Model::Isotropic) {
    den = kI * b * b - z_star * (kI * delta - z_star) * (kI * delta - z_star);
  } else {
    const double omega_c = *p.omega_c();
    const cplx bracket = (delta + kI * z_star) * (omega_c - kI * z_star) -
                         band_edge_root(p) * b;
    den = kI * b * b * z_star - bracket * bracket;
  }
  if (std::abs(den) <= 1e-12 * scale) {
    std::ostringstream msg;
    msg << "branch-cut integrand has a pole on the integration path at z = " << z_star
        << " (delta = " << delta << ")";
    throw SingularInputError(msg.str());
  }
}

}  // namespace

cplx diffusion_integral(const ReservoirParams& p, double t, const quad::Options& opts) {
  require_structured(p, "diffusion_integral");
  if (!(t >= 0.0)) throw ParameterError("diffusion_integral: t must be >= 0");
  check_cut_path(p);

  // z = S w^2 resolves both the e^{-zt} envelope (S = 1/t) and the sqrt(z)
  // behaviour at the origin.
  const double t0 = 1e-3 / p.beta();
  const double S = 1.0 / std::max(t, t0);
  auto integrand = [&](double w) -> cplx {
    const double z = S * w * w;
    const double envelope = std::exp(-z * t);
    if (envelope == 0.0) return 0.0;
    return diffusion_integrand(p, z) * envelope * (2.0 * S * w);
  };
  const auto result = quad::integrate_to_infinity(integrand, 0.0, 1.0, opts);
  return std::exp(kI * (p.delta() * t)) * result.value;
}

cplx closed_form_amplitude(const ReservoirParams& p, const RootSet& roots, double t,
                           const quad::Options& opts) {
  if (p.model() == Model::FreeSpace) return std::exp(-0.5 * p.beta() * t);
  cplx q = diffusion_integral(p, t, opts);
  if (roots.localized) {
    q += std::exp(*roots.localized * t) / localized_denominator_derivative(*roots.localized, p);
  }
  if (roots.propagating) {
    q += std::exp(*roots.propagating * t) /
         propagating_denominator_derivative(*roots.propagating, p);
  }
  return q;
}

AmplitudeSeries amplitude(const ReservoirParams& p, const TimeGrid& grid) {
  AmplitudeSeries series{grid, {}, {}, AmplitudeSource::ClosedForm};
  series.q.resize(grid.size());
  series.population.resize(grid.size());

  RootSet roots;
  if (p.model() != Model::FreeSpace) {
    roots = find_roots(p);
    const cplx q0 = closed_form_amplitude(p, roots, 0.0);
    if (std::abs(q0 - 1.0) > 1e-6) {
      std::ostringstream msg;
      msg << "pole residues plus branch-cut integral give q(0) = " << q0.real() << " + "
          << q0.imag() << "i, expected 1 (model " << to_string(p.model())
          << ", delta = " << p.delta() << ")";
      throw InternalConsistencyError(msg.str());
    }
  }

  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double t = grid.at(k);
    const cplx q = k == 0 ? cplx{1.0, 0.0} : closed_form_amplitude(p, roots, t);
    const double population = std::norm(q);
    if (population > 1.0 + 1e-9) {
      std::ostringstream msg;
      msg << "population " << population << " exceeds 1 at t = " << t;
      throw InternalConsistencyError(msg.str());
    }
    series.q[k] = q;
    series.population[k] = std::clamp(population, 0.0, 1.0);
  }
  return series;
}

double steady_population(const ReservoirParams& p) {
  if (p.model() == Model::FreeSpace) return 0.0;
  const auto localized = find_localized_root(p);
  if (!localized.root) return 0.0;
  return std::norm(1.0 / localized_denominator_derivative(*localized.root, p));
}

bool bound_state_present(const ReservoirParams& p) {
  if (p.model() == Model::FreeSpace) return false;
  return find_localized_root(p).root.has_value();
}

}  // namespace pcsq::reservoir
