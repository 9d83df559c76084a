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

#include <complex>

namespace pcsq::special {

/// Faddeeva function w(z) = exp(-z^2) erfc(-iz) for Im(z) >= 0.
///
/// Power series for |z| < 2.5, Laplace continued fraction otherwise. The
/// continued fraction converges slowly as Im(z) -> 0 with |z| large; there
/// it throws ConvergenceError rather than return an inaccurate value. Throws
/// ParameterError for Im(z) < 0.
std::complex<double> faddeeva_w(std::complex<double> z);

}  // namespace pcsq::special
