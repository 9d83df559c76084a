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

#include "pcsqueeze/volterra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <vector>

#include "pcsqueeze/error.hpp"
#include "pcsqueeze/faddeeva.hpp"
#include "pcsqueeze/quadrature.hpp"

namespace pcsq::volterra {
namespace {

constexpr cplx kI{0.0, 1.0};
constexpr int kMomentNodes = 16;

const quad::GaussLegendre& moment_rule() {
  static const quad::GaussLegendre rule(kMomentNodes);
  return rule;
}

// Hat-function moments of the kernel on [k h, (k+1) h]:
//   A_k = int G(s) ds,  B_k = int G(s) (s - k h) / h ds.
// With s = y^2 the integrand 2 y G(y^2) is smooth, so Gauss-Legendre in y
// integrates the t^{-1/2} singularity exactly up to rounding.
void kernel_moments(const KernelSpec& kernel, double h, std::size_t n,
                    std::vector<cplx>& a, std::vector<cplx>& b) {
  a.assign(n, 0.0);
  b.assign(n, 0.0);
  const auto& rule = moment_rule();
  for (std::size_t k = 0; k < n; ++k) {
    const double s0 = static_cast<double>(k) * h;
    const double y0 = std::sqrt(s0);
    const double y1 = std::sqrt(s0 + h);
    const double half = 0.5 * (y1 - y0);
    const double mid = 0.5 * (y1 + y0);
    cplx sum_a = 0.0;
    cplx sum_b = 0.0;
    for (int i = 0; i < rule.size(); ++i) {
      const double y = mid + half * rule.nodes()[i];
      const double s = y * y;
      const cplx g = rule.weights()[i] * kernel.time_kernel(s) * (2.0 * y);
      sum_a += g;
      sum_b += g * ((s - s0) / h);
    }
    a[k] = sum_a * half;
    b[k] = sum_b * half;
  }
}

AmplitudeSeries sample(const KernelSpec& kernel, const TimeGrid& grid,
                       const std::vector<cplx>& q, std::size_t substeps) {
  AmplitudeSeries series{grid, {}, {}, AmplitudeSource::VolterraOracle};
  series.q.resize(grid.size());
  series.population.resize(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const cplx value = q[k * substeps];
    const double population = std::norm(value);
    if (population > 1.0 + 1e-6) {
      std::ostringstream msg;
      msg << "oracle population " << population << " exceeds 1 at t = " << grid.at(k)
          << " (model " << to_string(kernel.model) << "): kernel sign error?";
      throw InternalConsistencyError(msg.str());
    }
    series.q[k] = value;
    series.population[k] = std::clamp(population, 0.0, 1.0);
  }
  return series;
}

// Markovian limit: q' = -(rate/2) q by classical RK4.
std::vector<cplx> solve_markovian(const KernelSpec& kernel, double h, std::size_t steps) {
  const double rate = 0.5 * kernel.markov_rate;
  std::vector<cplx> q(steps + 1);
  q[0] = 1.0;
  auto f = [&](cplx y) { return -rate * y; };
  for (std::size_t n = 0; n < steps; ++n) {
    const cplx k1 = f(q[n]);
    const cplx k2 = f(q[n] + 0.5 * h * k1);
    const cplx k3 = f(q[n] + 0.5 * h * k2);
    const cplx k4 = f(q[n] + h * k3);
    q[n + 1] = q[n] + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return q;
}

// Trapezoid in time for q' = -I with the memory integral
//   I_n = sum_k [(A_k - B_k) q_{n-k} + B_k q_{n-k-1}]
// from piecewise-linear q.
std::vector<cplx> solve_memory(const KernelSpec& kernel, double h, std::size_t steps) {
  std::vector<cplx> a;
  std::vector<cplx> b;
  kernel_moments(kernel, h, steps + 1, a, b);

  // Weight of q_{n-m} in I_{n+1} excluding the implicit q_{n+1} term.
  std::vector<cplx> w(steps + 1);
  for (std::size_t m = 0; m + 1 <= steps; ++m) w[m] = b[m] + (a[m + 1] - b[m + 1]);
  const cplx implicit = a[0] - b[0];

  std::vector<cplx> q(steps + 1);
  q[0] = 1.0;
  cplx memory = 0.0;  // I_n
  for (std::size_t n = 0; n < steps; ++n) {
    cplx known = b[n] * q[0];
    for (std::size_t m = 0; m < n; ++m) known += w[m] * q[n - m];
    const cplx next = (q[n] - 0.5 * h * (memory + known)) / (1.0 + 0.5 * h * implicit);
    memory = implicit * next + known;
    q[n + 1] = next;
  }
  return q;
}

}  // namespace

KernelSpec kernel_for(const ReservoirParams& p) {
  KernelSpec kernel;
  kernel.model = p.model();
  const double delta = p.delta();
  const double b = p.coupling();

  switch (p.model()) {
    case Model::FreeSpace: {
      const double rate = p.beta();
      kernel.markov_rate = rate;
      kernel.frequency_scale = rate;
      kernel.laplace_transform = [rate](cplx) { return cplx{0.5 * rate, 0.0}; };
      kernel.time_kernel = [](double) { return cplx{0.0, 0.0}; };
      return kernel;
    }
    case Model::Isotropic: {
      kernel.laplace_transform = [b, delta](cplx s) {
        return -kI * b / std::sqrt(-kI * s - delta);
      };
      const cplx c = std::polar(b, -0.25 * std::numbers::pi);
      kernel.time_kernel = [c, delta](double t) {
        return c * std::exp(kI * (delta * t)) / std::sqrt(std::numbers::pi * t);
      };
      kernel.frequency_scale = std::max({p.beta(), std::abs(delta)});
      return kernel;
    }
    case Model::Anisotropic: {
      const double root_wc = std::sqrt(*p.omega_c());
      kernel.laplace_transform = [b, delta, root_wc](cplx s) {
        return -kI * b / (root_wc + std::sqrt(-kI * s - delta));
      };
      const cplx c = std::polar(b, -0.25 * std::numbers::pi);
      const cplx a = std::polar(root_wc, 0.25 * std::numbers::pi);
      kernel.time_kernel = [c, a, delta](double t) {
        const double r = std::sqrt(t);
        const cplx bracket =
            1.0 / (std::sqrt(std::numbers::pi) * r) - a * special::faddeeva_w(kI * a * r);
        return c * std::exp(kI * (delta * t)) * bracket;
      };
      kernel.frequency_scale = std::max({p.beta(), std::abs(delta)});
      return kernel;
    }
  }
  return kernel;
}

KernelSpec with_phase_offset(KernelSpec kernel, double phase) {
  const cplx factor = std::polar(1.0, phase);
  auto laplace = kernel.laplace_transform;
  auto time = kernel.time_kernel;
  kernel.laplace_transform = [laplace, factor](cplx s) { return factor * laplace(s); };
  kernel.time_kernel = [time, factor](double t) { return factor * time(t); };
  return kernel;
}

cplx numeric_laplace_transform(const KernelSpec& kernel, cplx s) {
  if (kernel.markovian()) return 0.5 * kernel.markov_rate;
  if (!(s.real() > 0.0)) throw ParameterError("numeric_laplace_transform: needs Re(s) > 0");
  // t = y^2 removes the t^{-1/2} singularity.
  auto integrand = [&](double y) -> cplx {
    if (y == 0.0) return 0.0;
    const double t = y * y;
    return 2.0 * y * kernel.time_kernel(t) * std::exp(-s * t);
  };
  quad::Options opts;
  opts.rel_tol = 1e-12;
  opts.max_intervals = 20000;
  const double scale = 1.0 / std::sqrt(s.real());
  return quad::integrate_to_infinity(integrand, 0.0, scale, opts).value;
}

AmplitudeSeries solve_fixed(const KernelSpec& kernel, const TimeGrid& grid,
                            std::size_t substeps) {
  if (substeps == 0) throw ParameterError("solve_fixed: substeps must be positive");
  const std::size_t steps = static_cast<std::size_t>(grid.n_steps()) * substeps;
  const double h = grid.spacing() / static_cast<double>(substeps);
  const auto q = kernel.markovian() ? solve_markovian(kernel, h, steps)
                                    : solve_memory(kernel, h, steps);
  return sample(kernel, grid, q, substeps);
}

SolveReport solve_with_report(const KernelSpec& kernel, const TimeGrid& grid,
                              const SolveOptions& opts) {
  const double first_step = opts.initial_step / std::max(kernel.frequency_scale, 1e-12);
  std::size_t substeps =
      std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(grid.spacing() / first_step)));

  SolveReport report{solve_fixed(kernel, grid, substeps), false,
                     std::numeric_limits<double>::infinity(), substeps};
  for (int level = 0; level < opts.max_halvings; ++level) {
    const std::size_t finer = 2 * substeps;
    if (finer * static_cast<std::size_t>(grid.n_steps()) > opts.max_internal_steps) break;
    AmplitudeSeries fine = solve_fixed(kernel, grid, finer);
    double delta = 0.0;
    for (std::size_t k = 0; k < grid.size(); ++k)
      delta = std::max(delta, std::abs(fine.q[k] - report.series.q[k]));
    report.series = std::move(fine);
    report.refinement_delta = delta;
    report.substeps = finer;
    substeps = finer;
    if (delta <= opts.tolerance) {
      report.converged = true;
      break;
    }
  }
  return report;
}

AmplitudeSeries solve(const KernelSpec& kernel, const TimeGrid& grid, const SolveOptions& opts) {
  auto report = solve_with_report(kernel, grid, opts);
  if (!report.converged) {
    std::ostringstream msg;
    msg << "Volterra solver did not converge: step refinement changed q by "
        << report.refinement_delta << " > " << opts.tolerance << " at "
        << report.substeps << " substeps per grid interval";
    throw ConvergenceError(msg.str());
  }
  return std::move(report.series);
}

AmplitudeSeries solve(const ReservoirParams& p, const TimeGrid& grid, const SolveOptions& opts) {
  return solve(kernel_for(p), grid, opts);
}

}  // namespace pcsq::volterra
