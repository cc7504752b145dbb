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

#include "chandisc/probes.hpp"

#include <cmath>
#include <random>

namespace chandisc {

namespace {

void require_unit_norm(const ComplexVector& v, const char* what) {
  if (v.size() == 0) throw DimensionError(std::string(what) + ": empty amplitude vector");
  if (!(std::abs(v.norm() - 1.0) <= kProbeNormTolerance)) {
    throw DomainError(std::string(what) + ": amplitudes must have unit norm");
  }
}

ComplexVector gaussian_vector(Index dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  ComplexVector v(dim);
  for (Index i = 0; i < dim; ++i) v(i) = {normal(rng), normal(rng)};
  return v.normalized();
}

}  // namespace

SinglePureProbe::SinglePureProbe(ComplexVector amplitudes) : amplitudes_(std::move(amplitudes)) {
  require_unit_norm(amplitudes_, "single probe");
}

BipartitePureProbe::BipartitePureProbe(Index dim_a, Index dim_b, ComplexVector amplitudes)
    : dim_a_(dim_a), dim_b_(dim_b), amplitudes_(std::move(amplitudes)) {
  if (dim_a < 1 || dim_b < 1 || amplitudes_.size() != dim_a * dim_b) {
    throw DimensionError("bipartite probe: amplitude count does not match dim_a * dim_b");
  }
  require_unit_norm(amplitudes_, "bipartite probe");
}

SinglePureProbe bloch_qubit(double theta, double delta) {
  ComplexVector v(2);
  v(0) = std::cos(theta / 2.0);
  v(1) = std::polar(std::sin(theta / 2.0), delta);
  return SinglePureProbe(std::move(v));
}

SinglePureProbe basis_state(Index dim, Index k) {
  if (k < 0 || k >= dim) throw DimensionError("basis_state: index out of range");
  ComplexVector v = ComplexVector::Zero(dim);
  v(k) = 1.0;
  return SinglePureProbe(std::move(v));
}

SinglePureProbe uniform_superposition(Index d) {
  if (d < 2) throw DomainError("uniform_superposition: dimension must be at least 2");
  return SinglePureProbe(ComplexVector::Constant(d, 1.0 / std::sqrt(static_cast<double>(d))));
}

SinglePureProbe random_pure(Index dim, std::uint64_t seed) {
  if (dim < 1) throw DomainError("random_pure: dimension must be positive");
  return SinglePureProbe(gaussian_vector(dim, seed));
}

BipartitePureProbe max_entangled(Index d) {
  if (d < 2) throw DomainError("max_entangled: dimension must be at least 2");
  ComplexVector v = ComplexVector::Zero(d * d);
  for (Index i = 0; i < d; ++i) v(i * d + i) = 1.0 / std::sqrt(static_cast<double>(d));
  return BipartitePureProbe(d, d, std::move(v));
}

BipartitePureProbe nonmax_qubit(double g, double z) {
  if (!(g >= 0.0 && g <= 1.0)) throw DomainError("nonmax_qubit: g must lie in [0,1]");
  ComplexVector v = ComplexVector::Zero(4);
  v(0) = std::sqrt(g);
  v(3) = std::polar(std::sqrt(1.0 - g), z);
  // g = 1/2, z = 0 should be bit-identical to max_entangled(2)
  if (g == 0.5 && z == 0.0) v(0) = v(3) = 1.0 / std::sqrt(2.0);
  return BipartitePureProbe(2, 2, std::move(v));
}

BipartitePureProbe schmidt_pair(double p) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("schmidt_pair: p must lie in (0,1)");
  ComplexVector v = ComplexVector::Zero(4);
  v(0) = std::sqrt(p);
  v(3) = std::sqrt(1.0 - p);
  return BipartitePureProbe(2, 2, std::move(v));
}

BipartitePureProbe zeta_probe(std::complex<double> c1, std::complex<double> c2) {
  if (!(std::abs(std::norm(c1) + std::norm(c2) - 0.5) <= 1e-10)) {
    throw DomainError("zeta_probe: |c1|^2 + |c2|^2 must equal 1/2");
  }
  ComplexVector v = ComplexVector::Zero(9);
  v(0) = 1.0 / std::sqrt(2.0);
  v(4) = c1;
  v(8) = c2;
  // absorb the 1e-10 slack allowed above
  v.normalize();
  return BipartitePureProbe(3, 3, std::move(v));
}

BipartitePureProbe product_probe(const SinglePureProbe& a, const SinglePureProbe& b) {
  return BipartitePureProbe(a.dim(), b.dim(), tensor(a.amplitudes(), b.amplitudes()));
}

BipartitePureProbe random_bipartite(Index dim_a, Index dim_b, std::uint64_t seed) {
  return BipartitePureProbe(dim_a, dim_b, gaussian_vector(dim_a * dim_b, seed));
}

ComplexVector amplitudes_from_parameters(std::span<const double> params) {
  if (params.empty() || params.size() % 2 != 0) {
    throw DimensionError("probe parameters must be a non-empty vector of even length");
  }
  const auto n = static_cast<Index>(params.size() / 2);
  ComplexVector v(n);
  for (Index i = 0; i < n; ++i) {
    v(i) = {params[static_cast<std::size_t>(i)], params[static_cast<std::size_t>(i + n)]};
  }
  const double norm = v.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) throw DomainError("probe parameters have zero norm");
  return v / norm;
}

SinglePureProbe single_from_parameters(std::span<const double> params) {
  return SinglePureProbe(amplitudes_from_parameters(params));
}

BipartitePureProbe bipartite_from_parameters(Index dim_a, Index dim_b, std::span<const double> params) {
  return BipartitePureProbe(dim_a, dim_b, amplitudes_from_parameters(params));
}

}  // namespace chandisc
