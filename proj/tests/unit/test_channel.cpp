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

#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "pcsqueeze/channel.hpp"
#include "pcsqueeze/error.hpp"
#include "pcsqueeze/squeezing.hpp"

using namespace pcsq;
using cplx = std::complex<double>;
using Eigen::MatrixXcd;

namespace {

MatrixXcd random_density(int qubits, std::mt19937_64& rng) {
  const int dim = 1 << qubits;
  std::normal_distribution<double> g;
  MatrixXcd a(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) a(i, j) = cplx(g(rng), g(rng));
  MatrixXcd rho = a * a.adjoint();
  rho /= rho.trace();
  return rho;
}

// Reference: sum over all 2^m Kraus strings built by Kronecker products.
MatrixXcd apply_by_kraus_strings(const MatrixXcd& rho, const channel::KrausPair& k, int m) {
  const int dim = 1 << m;
  MatrixXcd out = MatrixXcd::Zero(dim, dim);
  for (int s = 0; s < (1 << m); ++s) {
    MatrixXcd op = MatrixXcd::Identity(1, 1);
    for (int q = 0; q < m; ++q) {
      const auto& e = (s >> q) & 1 ? k.e2 : k.e1;
      MatrixXcd next(op.rows() * 2, op.cols() * 2);
      for (int i = 0; i < op.rows(); ++i)
        for (int j = 0; j < op.cols(); ++j) next.block(2 * i, 2 * j, 2, 2) = op(i, j) * e;
      op = next;
    }
    out += op * rho * op.adjoint();
  }
  return out;
}

}  // namespace

TEST_CASE("kraus matrices") {
  const auto id = channel::kraus(1.0);
  CHECK(id.e1.isApprox(channel::Matrix2::Identity()));
  CHECK(id.e2.isZero());

  const auto full = channel::kraus(0.0);
  CHECK(full.e1(0, 0) == cplx(0.0));
  CHECK(full.e1(1, 1) == cplx(1.0));
  CHECK(full.e2(1, 0) == cplx(1.0));
  CHECK(full.e2(0, 0) == cplx(0.0));
  CHECK(full.e2(0, 1) == cplx(0.0));

  const auto k = channel::kraus(0.36);
  CHECK(k.e1(0, 0).real() == doctest::Approx(0.6).epsilon(1e-15));
  CHECK(k.e2(1, 0).real() == doctest::Approx(0.8).epsilon(1e-15));

  CHECK_THROWS_AS(channel::kraus(-1e-12), ParameterError);
  CHECK_THROWS_AS(channel::kraus(1.0 + 1e-12), ParameterError);
  CHECK_THROWS_AS(channel::kraus(NAN), ParameterError);
}

TEST_CASE("completeness holds to machine precision") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) CHECK(channel::completeness_defect(channel::kraus(u(rng))) <= 1e-14);
}

TEST_CASE("density matrix validation") {
  CHECK_THROWS_AS(channel::DensityMatrix(MatrixXcd::Identity(3, 3) / 3.0), ParameterError);
  CHECK_THROWS_AS(channel::DensityMatrix(MatrixXcd::Identity(2, 3)), ParameterError);
  CHECK_THROWS_AS(channel::DensityMatrix(MatrixXcd::Identity(2, 2)), ParameterError);
  MatrixXcd nonherm = MatrixXcd::Identity(2, 2) / 2.0;
  nonherm(0, 1) = 0.1;
  CHECK_THROWS_AS(channel::DensityMatrix{nonherm}, ParameterError);
  MatrixXcd negative(2, 2);
  negative << 1.5, 0, 0, -0.5;
  const channel::DensityMatrix rho(negative);
  CHECK_FALSE(rho.is_positive_semidefinite());
}

TEST_CASE("single-qubit examples") {
  MatrixXcd e = MatrixXcd::Zero(2, 2);
  e(0, 0) = 1.0;
  const auto half = channel::apply(channel::DensityMatrix(e), channel::kraus(0.5)).matrix();
  CHECK(std::abs(half(0, 0) - 0.5) <= 1e-15);
  CHECK(std::abs(half(1, 1) - 0.5) <= 1e-15);

  MatrixXcd g = MatrixXcd::Zero(2, 2);
  g(1, 1) = 1.0;
  for (double p : {0.0, 0.3, 1.0}) {
    CHECK(channel::apply(channel::DensityMatrix(g), channel::kraus(p)).matrix().isApprox(g, 1e-15));
  }

  MatrixXcd plus = MatrixXcd::Constant(2, 2, 0.5);
  const auto damped = channel::apply(channel::DensityMatrix(plus), channel::kraus(0.25)).matrix();
  CHECK(std::abs(damped(0, 1) - 0.25) <= 1e-15);
  CHECK(std::abs(damped(0, 0) - 0.125) <= 1e-15);

  CHECK_THROWS_AS(channel::apply(channel::DensityMatrix(MatrixXcd::Identity(4, 4) / 4.0),
                                 channel::kraus(0.5)),
                  ParameterError);
}

TEST_CASE("trace and positivity preserved on random states") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const int m = 1 + i % 3;
    const channel::DensityMatrix rho(random_density(m, rng));
    const auto k = channel::kraus(u(rng));
    const auto out = channel::apply_product(rho, k, m);
    CHECK(std::abs(out.trace() - 1.0) <= 1e-14);
    CHECK(out.is_positive_semidefinite());
    CHECK(out.matrix().isApprox(apply_by_kraus_strings(rho.matrix(), k, m), 1e-12));
  }
}

TEST_CASE("apply_product limits") {
  const channel::DensityMatrix rho(MatrixXcd::Identity(4, 4) / 4.0);
  CHECK_THROWS_AS(channel::apply_product(rho, channel::kraus(0.5), 3), ParameterError);
  CHECK_THROWS_AS(channel::apply_product(rho, channel::kraus(0.5), 0), ParameterError);
  CHECK(channel::apply_product(rho, channel::kraus(1.0), 2).matrix().isApprox(rho.matrix()));
}

TEST_CASE("full decay sends everything to the ground state") {
  std::mt19937_64 rng(3);
  const channel::DensityMatrix rho(random_density(3, rng));
  const auto out = channel::apply_product(rho, channel::kraus(0.0), 3).matrix();
  MatrixXcd ground = MatrixXcd::Zero(8, 8);
  ground(7, 7) = 1.0;
  CHECK(out.isApprox(ground, 1e-14));
}

TEST_CASE("composition of two damping steps") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    const channel::DensityMatrix rho(random_density(1, rng));
    const double p1 = 0.05 * i;
    const double p2 = 1.0 - 0.03 * i;
    const auto twice = channel::apply(channel::apply(rho, channel::kraus(p1)), channel::kraus(p2));
    const auto once = channel::apply(rho, channel::kraus(p1 * p2));
    CHECK(twice.matrix().isApprox(once.matrix(), 1e-14));
    CHECK(std::abs(twice.matrix()(0, 1) - std::sqrt(p1) * std::sqrt(p2) * rho.matrix()(0, 1)) <= 1e-14);
  }
}

TEST_CASE("two-qubit channel on the twisted-state reduction reproduces the evolved moments") {
  for (int n = 2; n <= 10; ++n) {
    for (double frac : {0.05, 0.15, 0.3}) {
      const double theta = frac * 3.141592653589793;
      const auto psi = squeezing::twisted_state(n, theta);
      const channel::DensityMatrix pair(squeezing::reduced_pair(psi, n));
      const auto m0 = squeezing::initial_moments(n, theta);
      for (double p : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        const auto m = squeezing::pair_correlators(
            Eigen::Matrix4cd(channel::apply_product(pair, channel::kraus(p), 2).matrix()));
        const auto ref = squeezing::evolved_moments(m0, p);
        CHECK(std::abs(m.sz - ref.sz) <= 1e-10);
        CHECK(std::abs(m.spm - ref.spm) <= 1e-10);
        CHECK(std::abs(m.smm - ref.smm) <= 1e-10);
      }
    }
  }
}
