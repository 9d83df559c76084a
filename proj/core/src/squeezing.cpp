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

#include "pcsqueeze/squeezing.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <string>

#include "pcsqueeze/error.hpp"

namespace pcsq::squeezing {

namespace {

constexpr int kMaxStateQubits = 14;
constexpr int kMaxDensityQubits = 12;

void require_atoms(int n, int max_n, const char* what) {
  if (n < 2) {
    throw ParameterError("invalid value for 'n_atoms': " + std::to_string(n) +
                         " (must be >= 2)");
  }
  if (n > max_n) {
    throw ParameterError(std::string(what) + " supports at most " +
                         std::to_string(max_n) + " atoms, got " +
                         std::to_string(n));
  }
}

// In-place unnormalised Walsh-Hadamard transform.
void hadamard_all(Eigen::VectorXcd& v) {
  const Eigen::Index n = v.size();
  for (Eigen::Index h = 1; h < n; h *= 2) {
    for (Eigen::Index i = 0; i < n; i += 2 * h) {
      for (Eigen::Index j = i; j < i + h; ++j) {
        const cplx a = v[j];
        const cplx b = v[j + h];
        v[j] = a + b;
        v[j + h] = a - b;
      }
    }
  }
}

// Pauli index: 0 = x, 1 = y, 2 = z. Acts on qubit `pos` of basis state j;
// returns the phase and updates j.
cplx apply_pauli(int alpha, int pos, int n, std::size_t& j) {
  const std::size_t mask = std::size_t{1} << (n - 1 - pos);
  const bool ground = (j & mask) != 0;
  switch (alpha) {
    case 0:
      j ^= mask;
      return 1.0;
    case 1:
      j ^= mask;
      return ground ? cplx(0.0, -1.0) : cplx(0.0, 1.0);
    default:
      return ground ? -1.0 : 1.0;
  }
}

}  // namespace

double zeta_from_xi(double xi2) { return std::max(0.0, 1.0 - xi2); }

Moments initial_moments(const EnsembleParams& e) {
  return initial_moments(e.n_atoms(), e.theta());
}

Moments initial_moments(int n_atoms, double theta) {
  if (n_atoms < 2) {
    throw ParameterError("invalid value for 'n_atoms': " +
                         std::to_string(n_atoms) + " (must be >= 2)");
  }
  if (!std::isfinite(theta)) {
    throw ParameterError("invalid value for 'theta': must be finite");
  }
  const double n = n_atoms;
  const double c_half = std::cos(theta / 2.0);
  const double s_half = std::sin(theta / 2.0);
  // pow(x, 0) == 1 covers N = 2 including x == 0.
  const double cos_full_pow = std::pow(std::cos(theta), n - 2.0);
  const double c_half_pow = std::pow(c_half, n - 2.0);

  Moments m;
  m.sz = -std::pow(c_half, n - 1.0);
  m.spm = (1.0 - cos_full_pow) / 8.0;
  m.smm = cplx(-m.spm, -0.5 * s_half * c_half_pow);
  return m;
}

Moments evolved_moments(const Moments& m0, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ParameterError("invalid value for 'p_surv': " + std::to_string(p) +
                         " (must lie in [0, 1])");
  }
  return Moments{p * m0.sz + p - 1.0, p * m0.spm, p * m0.smm};
}

std::optional<SqueezingValue> try_xi_squared(const Moments& m, int n_atoms) {
  if (m.sz == 0.0) return std::nullopt;
  const double num =
      1.0 + 2.0 * (n_atoms - 1.0) * (m.spm - std::abs(m.smm));
  const double xi2 = num / (m.sz * m.sz);
  return SqueezingValue{xi2, zeta_from_xi(xi2)};
}

SqueezingValue xi_squared(const Moments& m, int n_atoms) {
  if (auto v = try_xi_squared(m, n_atoms)) return *v;
  throw SingularMeanSpinError(
      "mean spin vanishes (<sigma_z> = 0); squeezing parameter undefined");
}

Eigen::VectorXcd twisted_state(int n_atoms, double theta) {
  require_atoms(n_atoms, kMaxStateQubits, "twisted_state");
  const std::size_t dim = std::size_t{1} << n_atoms;
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
  v[static_cast<Eigen::Index>(dim - 1)] = 1.0;
  hadamard_all(v);
  for (std::size_t j = 0; j < dim; ++j) {
    const double jz = 0.5 * (n_atoms - 2.0 * std::popcount(j));
    v[static_cast<Eigen::Index>(j)] *=
        std::exp(cplx(0.0, -0.5 * theta * jz * jz));
  }
  hadamard_all(v);
  v /= static_cast<double>(dim);
  return v;
}

Eigen::Matrix4cd reduced_pair(const Eigen::VectorXcd& state, int n_atoms) {
  const Eigen::Index rest = Eigen::Index{1} << (n_atoms - 2);
  if (state.size() != 4 * rest) {
    throw ParameterError("state size does not match n_atoms");
  }
  Eigen::Matrix4cd rho;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      rho(a, b) = state.segment(a * rest, rest)
                      .dot(state.segment(b * rest, rest));
      rho(a, b) = std::conj(rho(a, b));
    }
  }
  return rho;
}

Moments pair_correlators(const Eigen::Matrix4cd& rho) {
  Moments m;
  m.sz = (rho(0, 0) + rho(1, 1) - rho(2, 2) - rho(3, 3)).real();
  // sigma_+ sigma_- = |eg><ge|, sigma_- sigma_- = |gg><ee|.
  m.spm = rho(2, 1).real();
  m.smm = rho(0, 3);
  return m;
}

Moments brute_force_moments(const EnsembleParams& e) {
  return brute_force_moments(e.n_atoms(), e.theta());
}

Moments brute_force_moments(int n_atoms, double theta) {
  return pair_correlators(reduced_pair(twisted_state(n_atoms, theta), n_atoms));
}

CollectiveSpin collective_spin(const channel::DensityMatrix& rho) {
  const int n = rho.qubits();
  const auto& r = rho.matrix();
  const std::size_t dim = rho.dim();

  // Tr(rho P) for P = sigma_a^(m) sigma_b^(k) (b applied first).
  auto pair_value = [&](int a, int m, int b, int k) {
    cplx acc = 0.0;
    for (std::size_t j = 0; j < dim; ++j) {
      std::size_t jj = j;
      cplx ph = apply_pauli(b, k, n, jj);
      ph *= apply_pauli(a, m, n, jj);
      acc += r(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(jj)) *
             ph;
    }
    return acc;
  };
  auto single_value = [&](int a, int m) {
    cplx acc = 0.0;
    for (std::size_t j = 0; j < dim; ++j) {
      std::size_t jj = j;
      const cplx ph = apply_pauli(a, m, n, jj);
      acc += r(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(jj)) *
             ph;
    }
    return acc;
  };

  CollectiveSpin out;
  for (int a = 0; a < 3; ++a) {
    double s = 0.0;
    for (int m = 0; m < n; ++m) s += single_value(a, m).real();
    out.mean[a] = 0.5 * s;
  }
  std::array<std::array<cplx, 3>, 3> second{};
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      cplx s = 0.0;
      for (int m = 0; m < n; ++m) {
        for (int k = 0; k < n; ++k) s += pair_value(a, m, b, k);
      }
      second[a][b] = 0.25 * s;
    }
  }
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      out.covariance(a, b) = 0.5 * (second[a][b] + second[b][a]).real() -
                             out.mean[a] * out.mean[b];
    }
  }
  return out;
}

SqueezingValue wineland_parameter(const CollectiveSpin& spin, int n_atoms) {
  const double norm = spin.mean.norm();
  if (norm < 1e-12) {
    throw SingularMeanSpinError(
        "mean spin vanishes; squeezing parameter undefined");
  }
  const Eigen::Vector3d u = spin.mean / norm;
  Eigen::Vector3d seed = std::abs(u.x()) < 0.9 ? Eigen::Vector3d::UnitX()
                                               : Eigen::Vector3d::UnitY();
  const Eigen::Vector3d e1 = (seed - seed.dot(u) * u).normalized();
  const Eigen::Vector3d e2 = u.cross(e1);
  const double a = e1.dot(spin.covariance * e1);
  const double d = e2.dot(spin.covariance * e2);
  const double b = e1.dot(spin.covariance * e2);
  const double lambda_min =
      0.5 * (a + d) - std::sqrt(0.25 * (a - d) * (a - d) + b * b);
  const double xi2 = n_atoms * lambda_min / (norm * norm);
  return SqueezingValue{xi2, zeta_from_xi(xi2)};
}

SqueezingValue brute_force_xi(const EnsembleParams& e, double p) {
  return brute_force_xi(e.n_atoms(), e.theta(), p);
}

SqueezingValue brute_force_xi(int n_atoms, double theta, double p) {
  require_atoms(n_atoms, kMaxDensityQubits, "brute_force_xi");
  const auto k = channel::kraus(p);
  const auto rho0 = channel::DensityMatrix::pure(twisted_state(n_atoms, theta));
  const auto rho = channel::apply_product(rho0, k, n_atoms);
  return wineland_parameter(collective_spin(rho), n_atoms);
}

}  // namespace pcsq::squeezing
