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

// Excited-state amplitude q(t) of a two-level atom in a photonic-crystal
// reservoir, written as pole contributions plus a branch-cut integral.
//
// Laplace-domain conventions (b = beta^{3/2}, c = sqrt(omega_c)):
//
//   isotropic    F(x) = x - i b / sqrt(-ix - delta)
//                H(y) = y + b / sqrt(iy + delta)
//   anisotropic  x - i b / (c + sqrt(-ix - delta))        (localized pole)
//                y - i b / (c - i sqrt(iy + delta))        (propagating pole)
//
// All square roots are principal. The localized pole x = iu is the zero of
// the physical-sheet denominator on the imaginary axis above the branch
// point (u > delta). The propagating pole is the zero of the second-sheet
// denominator in the quadrant Re(y) < 0, Im(y) < delta swept when the cut is
// rotated onto s = i delta - z, z >= 0.

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "pcsqueeze/params.hpp"
#include "pcsqueeze/quadrature.hpp"

namespace pcsq {

using cplx = std::complex<double>;

struct RootSet {
  Model model = Model::Isotropic;
  std::optional<cplx> localized;
  std::optional<cplx> propagating;
  /// |denominator| at the root; zero when the root is absent.
  double residual_localized = 0.0;
  double residual_propagating = 0.0;
  /// Why a root is absent; empty when present.
  std::string localized_reason;
  std::string propagating_reason;
};

enum class AmplitudeSource { ClosedForm, VolterraOracle };

struct AmplitudeSeries {
  TimeGrid grid;
  std::vector<cplx> q;
  std::vector<double> population;
  AmplitudeSource source = AmplitudeSource::ClosedForm;
};

namespace reservoir {

// --- isotropic -----------------------------------------------------------

cplx eval_F(cplx x, const ReservoirParams& p);
cplx eval_F_derivative(cplx x, const ReservoirParams& p);
cplx eval_H(cplx y, const ReservoirParams& p);
cplx eval_H_derivative(cplx y, const ReservoirParams& p);

// --- anisotropic ---------------------------------------------------------

/// Residue denominator 1 - x^2 / (2 b sqrt(-ix - delta)). Equals the
/// derivative of the localized root equation at any of its roots.
cplx eval_F_aniso(cplx x, const ReservoirParams& p);
/// Residue denominator 1 - i y^2 / (2 b sqrt(iy + delta)).
cplx eval_H_aniso(cplx y, const ReservoirParams& p);

/// Left-hand side x - i b / (sqrt(omega_c) + sqrt(-ix - delta)).
cplx aniso_localized_equation(cplx x, const ReservoirParams& p);
cplx aniso_localized_equation_derivative(cplx x, const ReservoirParams& p);
/// Left-hand side y - i b / (sqrt(omega_c) - i sqrt(iy + delta)).
cplx aniso_propagating_equation(cplx y, const ReservoirParams& p);
cplx aniso_propagating_equation_derivative(cplx y, const ReservoirParams& p);

// --- model-generic -------------------------------------------------------

/// Physical-sheet denominator (F or the anisotropic localized equation).
cplx localized_denominator(cplx s, const ReservoirParams& p);
cplx localized_denominator_derivative(cplx s, const ReservoirParams& p);
/// Second-sheet denominator (H or the anisotropic propagating equation).
cplx propagating_denominator(cplx s, const ReservoirParams& p);
cplx propagating_denominator_derivative(cplx s, const ReservoirParams& p);

struct LocalizedRoot {
  std::optional<cplx> root;
  double residual = 0.0;
  std::string reason;
};

/// Bound-state pole by bracketing and bisection along the imaginary axis.
LocalizedRoot find_localized_root(const ReservoirParams& p);

/// Both poles. Absent roots are reported with a reason, never as errors.
/// Throws ParameterError for the free-space model.
RootSet find_roots(const ReservoirParams& p);

/// Branch-cut (diffusion-field) contribution at time t >= 0, including the
/// e^{i delta t} prefactor. Throws SingularInputError when a pole sits on
/// the integration path and ConvergenceError when quadrature fails.
cplx diffusion_integral(const ReservoirParams& p, double t,
                        const quad::Options& opts = {});

/// The cut integrand itself (without e^{-zt} and the prefactor), exposed
/// for tests.
cplx diffusion_integrand(const ReservoirParams& p, double z);

/// Pole terms plus cut integral at a single time.
cplx closed_form_amplitude(const ReservoirParams& p, const RootSet& roots, double t,
                           const quad::Options& opts = {});

/// q(t) on the grid. The free-space model returns exp(-beta t / 2).
/// Verifies |q(0) - 1| <= 1e-6 and |q|^2 <= 1 + 1e-9, otherwise throws
/// InternalConsistencyError.
AmplitudeSeries amplitude(const ReservoirParams& p, const TimeGrid& grid);

/// t -> infinity population: |residue of the localized pole|^2, or 0 when
/// there is no bound state.
double steady_population(const ReservoirParams& p);

/// Whether the localized (bound-state) pole exists.
bool bound_state_present(const ReservoirParams& p);

}  // namespace reservoir
}  // namespace pcsq
