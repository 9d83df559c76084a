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

#include "pcsqueeze/quadrature.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <queue>
#include <sstream>

#include "pcsqueeze/error.hpp"

namespace pcsq::quad {
namespace {

// Kronrod abscissae; odd indices are the embedded 7-point Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a;
  double b;
  cplx value;
  double error;
  bool operator<(const Segment& other) const { return error < other.error; }
};

Segment gk15(const Integrand& f, double a, double b) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  const cplx fc = f(mid);
  cplx kronrod = kWgk[7] * fc;
  cplx gauss = kWg[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const cplx pair = f(mid - dx) + f(mid + dx);
    kronrod += kWgk[j] * pair;
    if (j % 2 == 1) gauss += kWg[j / 2] * pair;
  }
  kronrod *= half;
  gauss *= half;
  return {a, b, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace

Result integrate(const Integrand& f, double a, double b, const Options& opts) {
  std::priority_queue<Segment> heap;
  Segment first = gk15(f, a, b);
  cplx total = first.value;
  double error = first.error;
  heap.push(first);

  int intervals = 1;
  for (;;) {
    if (!std::isfinite(error) || !std::isfinite(std::abs(total))) {
      throw ConvergenceError("quadrature produced a non-finite value");
    }
    if (error <= std::max(opts.abs_tol, opts.rel_tol * std::abs(total))) break;
    if (intervals >= opts.max_intervals) {
      std::ostringstream msg;
      msg << "adaptive quadrature did not converge after " << intervals
          << " intervals (error estimate " << error << ")";
      throw ConvergenceError(msg.str());
    }
    Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    Segment left = gk15(f, worst.a, mid);
    Segment right = gk15(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++intervals;
  }

  // Re-sum to shed the drift of the running updates.
  cplx sum{};
  double err = 0.0;
  while (!heap.empty()) {
    sum += heap.top().value;
    err += heap.top().error;
    heap.pop();
  }
  return {sum, err, intervals};
}

Result integrate_to_infinity(const Integrand& f, double a, double scale,
                             const Options& opts) {
  auto mapped = [&](double u) -> cplx {
    const double one_minus = 1.0 - u;
    const double x = a + scale * u / one_minus;
    return f(x) * (scale / (one_minus * one_minus));
  };
  return integrate(mapped, 0.0, 1.0, opts);
}

GaussLegendre::GaussLegendre(int n) : nodes_(n), weights_(n) {
  // Newton iteration on P_n from the Chebyshev initial guesses.
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    nodes_[i] = x;
    weights_[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
}

}  // namespace pcsq::quad
