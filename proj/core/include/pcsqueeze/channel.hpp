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

// Non-Markovian amplitude-damping channel parameterized by the survival
// population p = |q(t)|^2.
//
// Basis order, used throughout the library: index 0 = |e> (excited),
// index 1 = |g> (ground). In an m-qubit register qubit 0 is the most
// significant bit of the basis index.

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace pcsq::channel {

using Matrix2 = Eigen::Matrix2cd;

/// Kraus pair E1 = diag(sqrt(p), 1), E2 = sqrt(1-p) |g><e|.
struct KrausPair {
  Matrix2 e1;
  Matrix2 e2;
  double p_surv = 1.0;
};

/// Throws ParameterError unless p_surv lies in [0, 1].
KrausPair kraus(double p_surv);

/// ||E1^dag E1 + E2^dag E2 - I|| (max-abs entry).
double completeness_defect(const KrausPair& k);

/// Density operator on a register of qubits.
class DensityMatrix {
 public:
  /// Checks shape (square, power-of-two size) and Hermiticity and trace
  /// within `tol`. Positivity is checked separately (it needs an
  /// eigen-decomposition).
  explicit DensityMatrix(Eigen::MatrixXcd entries, double tol = 1e-12);

  static DensityMatrix pure(const Eigen::VectorXcd& state);

  std::size_t dim() const { return static_cast<std::size_t>(rho_.rows()); }
  int qubits() const { return qubits_; }
  const Eigen::MatrixXcd& matrix() const { return rho_; }

  std::complex<double> trace() const { return rho_.trace(); }
  double min_eigenvalue() const;
  bool is_positive_semidefinite(double tol = 1e-10) const {
    return min_eigenvalue() >= -tol;
  }

 private:
  struct Unchecked {};
  DensityMatrix(Eigen::MatrixXcd entries, Unchecked);
  friend DensityMatrix apply_product(const DensityMatrix&, const KrausPair&, int);

  Eigen::MatrixXcd rho_;
  int qubits_ = 0;
};

/// rho' = E1 rho E1^dag + E2 rho E2^dag on a single qubit.
DensityMatrix apply(const DensityMatrix& rho, const KrausPair& k);

/// Applies the channel to every one of the m qubits, one factor at a time.
/// Throws ParameterError when rho is not an m-qubit operator or m > 12.
DensityMatrix apply_product(const DensityMatrix& rho, const KrausPair& k, int m);

}  // namespace pcsq::channel
