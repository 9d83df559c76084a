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

#include "pcsqueeze/faddeeva.hpp"

#include <cmath>
#include <numbers>

#include "pcsqueeze/error.hpp"

namespace pcsq::special {
namespace {

using cplx = std::complex<double>;

constexpr double kSeriesRadius = 2.5;
constexpr int kMaxFractionTerms = 20000;

// w(z) = exp(-z^2) + sum_m (iz)^{2m+1} / Gamma(m + 3/2).
cplx series(cplx z) {
  const cplx iz{-z.imag(), z.real()};
  const cplx minus_z2 = -z * z;
  cplx term = iz / (0.5 * std::sqrt(std::numbers::pi));
  cplx odd = term;
  for (int m = 0; m < 200; ++m) {
    term *= minus_z2 / (m + 1.5);
    odd += term;
    if (std::abs(term) < 1e-17 * std::abs(odd)) break;
  }
  return std::exp(minus_z2) + odd;
}

// w(z) = (i / sqrt(pi)) / (z - (1/2) / (z - (2/2) / (z - (3/2) / ...)))
// evaluated with the modified Lentz algorithm.
cplx continued_fraction(cplx z) {
  constexpr double tiny = 1e-300;
  cplx f = z;
  cplx c = f;
  cplx d = 0.0;
  for (int k = 1; k <= kMaxFractionTerms; ++k) {
    const double a = -0.5 * k;
    d = z + a * d;
    if (std::abs(d) < tiny) d = tiny;
    c = z + a / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const cplx delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-16) {
      return cplx{0.0, 1.0 / std::sqrt(std::numbers::pi)} / f;
    }
  }
  throw ConvergenceError("Faddeeva continued fraction did not converge");
}

}  // namespace

std::complex<double> faddeeva_w(std::complex<double> z) {
  if (z.imag() < 0.0) throw ParameterError("faddeeva_w: requires Im(z) >= 0");
  if (std::abs(z) < kSeriesRadius) return series(z);
  return continued_fraction(z);
}

}  // namespace pcsq::special
