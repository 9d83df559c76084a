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

#include "pcsqueeze/channel.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "pcsqueeze/error.hpp"

namespace pcsq::channel {
namespace {

constexpr int kMaxQubits = 12;

int log2_exact(Eigen::Index n) {
  if (n <= 0) return -1;
  int bits = 0;
  while ((Eigen::Index{1} << bits) < n) ++bits;
  return (Eigen::Index{1} << bits) == n ? bits : -1;
}

}  // namespace

KrausPair kraus(double p_surv) {
  if (!(p_surv >= 0.0 && p_surv <= 1.0)) {
    std::ostringstream msg;
    msg << "survival population " << p_surv << " outside [0, 1]";
    throw ParameterError(msg.str());
  }
  KrausPair k;
  k.p_surv = p_surv;
  k.e1 << std::sqrt(p_surv), 0.0, 0.0, 1.0;
  k.e2 << 0.0, 0.0, std::sqrt(1.0 - p_surv), 0.0;
  return k;
}

double completeness_defect(const KrausPair& k) {
  const Matrix2 sum = k.e1.adjoint() * k.e1 + k.e2.adjoint() * k.e2;
  return (sum - Matrix2::Identity()).cwiseAbs().maxCoeff();
}

DensityMatrix::DensityMatrix(Eigen::MatrixXcd entries, Unchecked)
    : rho_(std::move(entries)), qubits_(log2_exact(rho_.rows())) {}

DensityMatrix::DensityMatrix(Eigen::MatrixXcd entries, double tol)
    : rho_(std::move(entries)) {
  if (rho_.rows() != rho_.cols()) throw ParameterError("density matrix must be square");
  qubits_ = log2_exact(rho_.rows());
  if (qubits_ < 0) {
    std::ostringstream msg;
    msg << "density matrix dimension " << rho_.rows() << " is not a power of two";
    throw ParameterError(msg.str());
  }
  const double hermiticity = (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff();
  if (hermiticity > tol) {
    std::ostringstream msg;
    msg << "density matrix is not Hermitian (defect " << hermiticity << ")";
    throw ParameterError(msg.str());
  }
  if (std::abs(rho_.trace() - 1.0) > tol) {
    std::ostringstream msg;
    msg << "density matrix trace " << rho_.trace().real() << " differs from 1";
    throw ParameterError(msg.str());
  }
}

DensityMatrix DensityMatrix::pure(const Eigen::VectorXcd& state) {
  return DensityMatrix(state * state.adjoint());
}

double DensityMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho_, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

DensityMatrix apply(const DensityMatrix& rho, const KrausPair& k) {
  if (rho.dim() != 2) {
    std::ostringstream msg;
    msg << "apply: expected a single-qubit density matrix, got dimension " << rho.dim();
    throw ParameterError(msg.str());
  }
  return apply_product(rho, k, 1);
}

DensityMatrix apply_product(const DensityMatrix& rho, const KrausPair& k, int m) {
  if (m < 1 || m > kMaxQubits) {
    std::ostringstream msg;
    msg << "apply_product: qubit count " << m << " outside [1, " << kMaxQubits << "]";
    throw ParameterError(msg.str());
  }
  if (rho.qubits() != m) {
    std::ostringstream msg;
    msg << "apply_product: dimension " << rho.dim() << " does not match " << m << " qubits";
    throw ParameterError(msg.str());
  }

  Eigen::MatrixXcd out = rho.matrix();
  const Eigen::Index dim = out.rows();
  std::array<Matrix2, 2> ops = {k.e1, k.e2};

  for (int qubit = 0; qubit < m; ++qubit) {
    const Eigen::Index bit = Eigen::Index{1} << (m - 1 - qubit);
    for (Eigen::Index r = 0; r < dim; ++r) {
      if (r & bit) continue;
      for (Eigen::Index c = 0; c < dim; ++c) {
        if (c & bit) continue;
        Matrix2 block;
        block << out(r, c), out(r, c | bit), out(r | bit, c), out(r | bit, c | bit);
        Matrix2 mapped = Matrix2::Zero();
        for (const auto& e : ops) mapped += e * block * e.adjoint();
        out(r, c) = mapped(0, 0);
        out(r, c | bit) = mapped(0, 1);
        out(r | bit, c) = mapped(1, 0);
        out(r | bit, c | bit) = mapped(1, 1);
      }
    }
  }
  return DensityMatrix(std::move(out), DensityMatrix::Unchecked{});
}

}  // namespace pcsq::channel
