// Copyright 2026 The chandisc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace chandisc {

// Base for every error raised by the library. The CLI maps the concrete
// subclasses onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operand shapes do not fit together.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A parameter lies outside the domain an operation accepts (probabilities
// outside (0,1), non-unitary matrices, unnormalised amplitudes, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class NotHermitianError : public DomainError {
 public:
  using DomainError::DomainError;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// A Kraus set fails trace preservation or complete positivity.
class CptpError : public Error {
 public:
  CptpError(const std::string& what, double trace_residual, double choi_min_eigenvalue)
      : Error(what), trace_residual_(trace_residual), choi_min_eigenvalue_(choi_min_eigenvalue) {}

  double trace_residual() const { return trace_residual_; }
  double choi_min_eigenvalue() const { return choi_min_eigenvalue_; }

 private:
  double trace_residual_;
  double choi_min_eigenvalue_;
};

}  // namespace chandisc
