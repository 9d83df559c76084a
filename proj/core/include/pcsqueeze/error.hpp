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

#include <stdexcept>
#include <string>

namespace pcsq {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid user-supplied parameters (config keys, out-of-domain values,
/// violated preconditions on arguments).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A numerical procedure exhausted its refinement budget.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Input lies on a branch point or a singularity of the evaluated function.
class SingularInputError : public Error {
 public:
  using Error::Error;
};

/// The mean spin vanishes, so the squeezing parameter is undefined.
class SingularMeanSpinError : public Error {
 public:
  using Error::Error;
};

/// A self-consistency check failed (e.g. q(0) != 1, population above one).
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace pcsq
