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

// Reference solution of the memory-kernel equation
//
//   q'(t) = -int_0^t G(t - tau) q(tau) dtau,   q(0) = 1,
//
// by product integration. The kernel is built from the same Laplace-domain
// denominators as the closed form, G~(s) = D(s) - s, but the solver never
// touches the pole and cut machinery.

#include <complex>
#include <cstddef>
#include <functional>

#include "pcsqueeze/params.hpp"
#include "pcsqueeze/reservoir.hpp"

namespace pcsq::volterra {

/// Memory kernel in both representations.
///
/// For the structured reservoirs the time kernel has the form
///   G(t) = c e^{i delta t} [ 1/sqrt(pi t) - a w(i a sqrt(t)) ]
/// with c = e^{-i pi/4} beta^{3/2}; a = 0 (isotropic) or
/// a = sqrt(omega_c) e^{i pi/4} (anisotropic); w is the Faddeeva function.
/// The free-space kernel is markov_rate * delta(t) with half weight at the
/// upper limit, so laplace_transform(s) = markov_rate / 2.
struct KernelSpec {
  Model model = Model::Isotropic;
  std::function<cplx(cplx)> laplace_transform;
  /// Weakly singular (t^{-1/2}) at t = 0; only evaluated for t > 0.
  std::function<cplx(double)> time_kernel;
  /// Non-zero only for the Markovian (free-space) kernel.
  double markov_rate = 0.0;
  /// Characteristic frequency used to choose the first step size.
  double frequency_scale = 1.0;

  bool markovian() const { return model == Model::FreeSpace; }
};

KernelSpec kernel_for(const ReservoirParams& p);

/// Multiplies both representations by e^{i phase}. Used to inject faults
/// into validation runs.
KernelSpec with_phase_offset(KernelSpec kernel, double phase);

/// int_0^inf G(t) e^{-st} dt by adaptive quadrature (Re s > 0).
cplx numeric_laplace_transform(const KernelSpec& kernel, cplx s);

struct SolveOptions {
  /// Accept when refining the step changes q by at most this (sup norm on
  /// the output grid).
  double tolerance = 1e-4;
  /// Upper bound on the first internal step, in units of 1/frequency_scale.
  double initial_step = 0.02;
  int max_halvings = 8;
  std::size_t max_internal_steps = std::size_t{1} << 17;
};

struct SolveReport {
  AmplitudeSeries series;
  bool converged = false;
  /// sup |q_h - q_{h/2}| of the last refinement.
  double refinement_delta = 0.0;
  /// Internal steps per output grid interval of the returned solution.
  std::size_t substeps = 0;
};

/// Runs the step-halving loop and reports; never throws on non-convergence.
SolveReport solve_with_report(const KernelSpec& kernel, const TimeGrid& grid,
                              const SolveOptions& opts = {});

/// Single fixed-step run with `substeps` internal steps per grid interval.
AmplitudeSeries solve_fixed(const KernelSpec& kernel, const TimeGrid& grid,
                            std::size_t substeps);

/// Throws ConvergenceError when the refinement budget is exhausted and
/// InternalConsistencyError when |q|^2 exceeds 1 + 1e-6.
AmplitudeSeries solve(const KernelSpec& kernel, const TimeGrid& grid,
                      const SolveOptions& opts = {});
AmplitudeSeries solve(const ReservoirParams& p, const TimeGrid& grid,
                      const SolveOptions& opts = {});

}  // namespace pcsq::volterra
