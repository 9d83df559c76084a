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

// Adaptive Gauss-Kronrod quadrature for complex-valued integrands and
// fixed-order Gauss-Legendre rules.

#include <complex>
#include <functional>
#include <vector>

namespace pcsq::quad {

using cplx = std::complex<double>;
using Integrand = std::function<cplx(double)>;

struct Options {
  double rel_tol = 1e-10;
  double abs_tol = 1e-15;
  int max_intervals = 4000;
};

struct Result {
  cplx value;
  double error_estimate = 0.0;
  int intervals = 0;
};

/// Globally adaptive G7/K15 on [a, b]. Interval with the largest error is
/// bisected until the summed error estimate meets the tolerance. Throws
/// ConvergenceError once `max_intervals` is exceeded.
Result integrate(const Integrand& f, double a, double b, const Options& opts = {});

/// Integral over [a, inf) through x = a + scale * u / (1 - u), u in [0, 1).
/// `scale` should match the width over which f carries most of its mass.
Result integrate_to_infinity(const Integrand& f, double a, double scale,
                             const Options& opts = {});

/// n-point Gauss-Legendre rule on [-1, 1].
class GaussLegendre {
 public:
  explicit GaussLegendre(int n);

  int size() const { return static_cast<int>(nodes_.size()); }
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }

  /// Integral of f over [a, b].
  template <class F>
  auto apply(F&& f, double a, double b) const {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    decltype(f(mid)) sum{};
    for (std::size_t i = 0; i < nodes_.size(); ++i)
      sum += weights_[i] * f(mid + half * nodes_[i]);
    return sum * half;
  }

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

}  // namespace pcsq::quad
