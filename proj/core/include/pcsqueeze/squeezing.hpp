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

// Wineland spin-squeezing parameter for N atoms that start in the one-axis
// twisted state exp(-i theta J_x^2 / 2)|g>^N and decay independently through
// identical amplitude-damping channels.
//
// Exchange symmetry reduces xi_R^2 to three two-qubit moments:
//
//   xi_R^2 = [1 + 2(N-1)(<s+ s-> - |<s- s->|)] / <s_z>^2
//
// The brute-force routines build the full 2^N state instead and minimise
// the transverse variance directly; they exist to validate that reduction.

#include <complex>
#include <optional>

#include <Eigen/Dense>

#include "pcsqueeze/channel.hpp"
#include "pcsqueeze/params.hpp"

namespace pcsq::squeezing {

using cplx = std::complex<double>;

struct Moments {
  double sz = -1.0;    ///< <sigma_z^(1)>
  double spm = 0.0;    ///< <sigma_+^(1) sigma_-^(2)>
  cplx smm = 0.0;      ///< <sigma_-^(1) sigma_-^(2)>
};

struct SqueezingValue {
  double xi2 = 1.0;
  double zeta2 = 0.0;  ///< max(0, 1 - xi2)
};

double zeta_from_xi(double xi2);

/// Closed-form moments of the twisted state.
Moments initial_moments(const EnsembleParams& e);
/// Same formula with only N >= 2 enforced, so theta = 0 can be probed.
Moments initial_moments(int n_atoms, double theta);

/// Moments after every qubit passed through the channel with survival p.
/// Throws ParameterError for p outside [0, 1].
Moments evolved_moments(const Moments& m0, double p_surv);

/// Throws SingularMeanSpinError when sz == 0.
SqueezingValue xi_squared(const Moments& m, int n_atoms);
/// nullopt instead of throwing for the singular case.
std::optional<SqueezingValue> try_xi_squared(const Moments& m, int n_atoms);

// --- brute force ----------------------------------------------------------

/// 2^N amplitude vector of the twisted state (N <= 14). J_x^2 is
/// diagonalised by the Hadamard transform, so the exponential is applied
/// exactly.
Eigen::VectorXcd twisted_state(int n_atoms, double theta);

/// 4x4 reduced density matrix of qubits 0 and 1.
Eigen::Matrix4cd reduced_pair(const Eigen::VectorXcd& state, int n_atoms);

/// sz, spm, smm read off a two-qubit density matrix.
Moments pair_correlators(const Eigen::Matrix4cd& rho);

/// Moments from the explicit 2^N state. Throws ParameterError when N > 14.
Moments brute_force_moments(const EnsembleParams& e);
Moments brute_force_moments(int n_atoms, double theta);

struct CollectiveSpin {
  Eigen::Vector3d mean;        ///< <J_x>, <J_y>, <J_z>
  Eigen::Matrix3d covariance;  ///< symmetrised covariance of J
};

CollectiveSpin collective_spin(const channel::DensityMatrix& rho);

/// N (Delta J_perp)^2_min / |<J>|^2 from a collective-spin summary.
SqueezingValue wineland_parameter(const CollectiveSpin& spin, int n_atoms);

/// Full-register density operator, channel applied to every qubit, then
/// the Wineland parameter by exact 2x2 eigen-decomposition of the
/// transverse covariance block. N <= 12.
SqueezingValue brute_force_xi(const EnsembleParams& e, double p_surv);
SqueezingValue brute_force_xi(int n_atoms, double theta, double p_surv);

}  // namespace pcsq::squeezing
