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

#include <doctest.h>

#include "chandisc/matcore.hpp"

namespace chandisc::testing {

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  REQUIRE(a.rows() == b.rows());
  REQUIRE(a.cols() == b.cols());
  return (a - b).cwiseAbs().maxCoeff();
}

inline ComplexMatrix random_hermitian(Index dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> n;
  ComplexMatrix g(dim, dim);
  for (Index i = 0; i < dim; ++i) {
    for (Index j = 0; j < dim; ++j) g(i, j) = {n(rng), n(rng)};
  }
  return (g + g.adjoint()) / 2.0;
}

// Mixed state of full rank built from a random Hermitian square.
inline ComplexMatrix random_density(Index dim, std::uint64_t seed) {
  const ComplexMatrix h = random_hermitian(dim, seed);
  ComplexMatrix rho = h * h.adjoint();
  return rho / rho.trace().real();
}

inline ComplexMatrix projector(const ComplexVector& v) { return v * v.adjoint(); }

}  // namespace chandisc::testing
