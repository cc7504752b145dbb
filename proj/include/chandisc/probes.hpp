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

#include <complex>
#include <cstdint>
#include <span>

#include "chandisc/matcore.hpp"

namespace chandisc {

inline constexpr double kProbeNormTolerance = 1e-12;

/// Pure state of a single system.
class SinglePureProbe {
 public:
  // Throws DomainError unless ||amplitudes|| = 1 within 1e-12.
  explicit SinglePureProbe(ComplexVector amplitudes);

  Index dim() const { return amplitudes_.size(); }
  const ComplexVector& amplitudes() const { return amplitudes_; }
  ComplexMatrix density() const { return amplitudes_ * amplitudes_.adjoint(); }

 private:
  ComplexVector amplitudes_;
};

/// Pure state on C^dim_a (x) C^dim_b, amplitude index ia * dim_b + ib.
class BipartitePureProbe {
 public:
  BipartitePureProbe(Index dim_a, Index dim_b, ComplexVector amplitudes);

  Index dim_a() const { return dim_a_; }
  Index dim_b() const { return dim_b_; }
  const ComplexVector& amplitudes() const { return amplitudes_; }
  ComplexMatrix density() const { return amplitudes_ * amplitudes_.adjoint(); }

 private:
  Index dim_a_;
  Index dim_b_;
  ComplexVector amplitudes_;
};

/// cos(theta/2)|0> + exp(i delta) sin(theta/2)|1>.
SinglePureProbe bloch_qubit(double theta, double delta);
SinglePureProbe basis_state(Index dim, Index k);
SinglePureProbe uniform_superposition(Index d);
SinglePureProbe random_pure(Index dim, std::uint64_t seed);

BipartitePureProbe max_entangled(Index d);
/// sqrt(g)|00> + exp(i z) sqrt(1-g)|11>.
BipartitePureProbe nonmax_qubit(double g, double z);
/// sqrt(p)|00> + sqrt(1-p)|11>, p in (0,1).
BipartitePureProbe schmidt_pair(double p);
/// |00>/sqrt(2) + c1|11> + c2|22>, requires |c1|^2 + |c2|^2 = 1/2.
BipartitePureProbe zeta_probe(std::complex<double> c1, std::complex<double> c2);
BipartitePureProbe product_probe(const SinglePureProbe& a, const SinglePureProbe& b);
BipartitePureProbe random_bipartite(Index dim_a, Index dim_b, std::uint64_t seed);

// Optimizer parameterisations: 2n reals (real parts then imaginary parts)
// mapped to a complex vector and normalised. The all-zero vector is rejected.
ComplexVector amplitudes_from_parameters(std::span<const double> params);
SinglePureProbe single_from_parameters(std::span<const double> params);
BipartitePureProbe bipartite_from_parameters(Index dim_a, Index dim_b, std::span<const double> params);

}  // namespace chandisc
