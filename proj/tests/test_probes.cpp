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

#include <cmath>
#include <numbers>
#include <vector>

#include <doctest.h>

#include "chandisc/probes.hpp"
#include "test_support.hpp"

using namespace chandisc;
using chandisc::testing::max_abs_diff;

namespace {

double distance(const ComplexVector& a, std::initializer_list<std::complex<double>> b) {
  REQUIRE(a.size() == static_cast<Index>(b.size()));
  double worst = 0.0;
  Index i = 0;
  for (auto v : b) worst = std::max(worst, std::abs(a(i++) - v));
  return worst;
}

}  // namespace

TEST_CASE("bloch qubit") {
  CHECK(distance(bloch_qubit(0.0, 1.234).amplitudes(), {1.0, 0.0}) < 1e-15);
  CHECK(distance(bloch_qubit(std::numbers::pi, 0.0).amplitudes(), {0.0, 1.0}) < 1e-15);
  const double h = 1.0 / std::sqrt(2.0);
  CHECK(distance(bloch_qubit(std::numbers::pi / 2, std::numbers::pi / 2).amplitudes(), {h, {0.0, h}}) < 1e-15);
}

TEST_CASE("uniform superposition and basis states") {
  CHECK(distance(uniform_superposition(2).amplitudes(), {1 / std::sqrt(2.0), 1 / std::sqrt(2.0)}) < 1e-15);
  const double t = 1 / std::sqrt(3.0);
  CHECK(distance(uniform_superposition(3).amplitudes(), {t, t, t}) < 1e-15);
  CHECK(distance(uniform_superposition(4).amplitudes(), {0.5, 0.5, 0.5, 0.5}) < 1e-15);
  CHECK(distance(basis_state(3, 2).amplitudes(), {0.0, 0.0, 1.0}) == 0.0);
  CHECK_THROWS_AS(basis_state(3, 3), DimensionError);
}

TEST_CASE("maximally entangled states") {
  const double h = 1 / std::sqrt(2.0);
  CHECK(distance(max_entangled(2).amplitudes(), {h, 0, 0, h}) < 1e-15);
  const double t = 1 / std::sqrt(3.0);
  CHECK(distance(max_entangled(3).amplitudes(), {t, 0, 0, 0, t, 0, 0, 0, t}) < 1e-15);
  for (Index d = 2; d <= 6; ++d) {
    const ComplexMatrix reduced = partial_trace(max_entangled(d).density(), d, d, Subsystem::A);
    CHECK(max_abs_diff(reduced, ComplexMatrix(ComplexMatrix::Identity(d, d) / static_cast<double>(d))) < 1e-15);
  }
}

TEST_CASE("non-maximally entangled qubit pairs") {
  CHECK(distance(nonmax_qubit(1.0, 0.7).amplitudes(), {1.0, 0, 0, 0}) < 1e-15);
  CHECK(distance(nonmax_qubit(0.3, 0.0).amplitudes(), {std::sqrt(0.3), 0, 0, std::sqrt(0.7)}) < 1e-15);
  CHECK(nonmax_qubit(0.5, 0.0).amplitudes() == max_entangled(2).amplitudes());
  CHECK(std::abs(nonmax_qubit(0.5, 1.0).amplitudes()(3) - std::polar(1 / std::sqrt(2.0), 1.0)) < 1e-15);
  CHECK_THROWS_AS(nonmax_qubit(1.5, 0.0), DomainError);

  CHECK(distance(schmidt_pair(0.1).amplitudes(), {std::sqrt(0.1), 0, 0, std::sqrt(0.9)}) < 1e-15);
  CHECK_THROWS_AS(schmidt_pair(0.0), DomainError);
}

TEST_CASE("zeta probes") {
  const double h = 1 / std::sqrt(2.0);
  CHECK(distance(zeta_probe(0.5, 0.5).amplitudes(), {h, 0, 0, 0, 0.5, 0, 0, 0, 0.5}) < 1e-15);

  for (auto [c1, c2] : {std::pair<std::complex<double>, std::complex<double>>{0.5, 0.5},
                        {h, 0.0},
                        {0.0, h},
                        {std::polar(0.3, 0.4), std::polar(std::sqrt(0.5 - 0.09), -1.0)}}) {
    const auto z = zeta_probe(c1, c2);
    const ComplexMatrix reduced = partial_trace(z.density(), 3, 3, Subsystem::A);
    ComplexMatrix expected = ComplexMatrix::Zero(3, 3);
    expected(0, 0) = 0.5;
    expected(1, 1) = std::norm(c1);
    expected(2, 2) = std::norm(c2);
    CHECK(max_abs_diff(reduced, expected) < 1e-12);
    const auto schmidt = hermitian_eigenvalues(reduced);
    const Index rank = (schmidt.array() > 1e-14).count();
    CHECK(rank == 1 + (std::abs(c1) > 0) + (std::abs(c2) > 0));
  }
  CHECK_THROWS_AS(zeta_probe(0.5, 0.6), DomainError);
}

TEST_CASE("constructors return unit vectors") {
  std::vector<ComplexVector> all{bloch_qubit(0.4, 1.1).amplitudes(), uniform_superposition(5).amplitudes(),
                                 max_entangled(6).amplitudes(),     nonmax_qubit(0.2, 2.0).amplitudes(),
                                 schmidt_pair(0.7).amplitudes(),    zeta_probe(0.5, 0.5).amplitudes()};
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    all.push_back(random_pure(2 + static_cast<Index>(seed % 5), seed).amplitudes());
    all.push_back(random_bipartite(2, 3, seed).amplitudes());
    all.push_back(product_probe(random_pure(2, seed), random_pure(3, seed + 1)).amplitudes());
  }
  for (const auto& v : all) CHECK(std::abs(v.norm() - 1.0) <= 1e-12);
}

TEST_CASE("random pure states are reproducible and Haar-like") {
  CHECK(random_pure(4, 9).amplitudes() == random_pure(4, 9).amplitudes());
  CHECK((random_pure(4, 9).amplitudes() - random_pure(4, 10).amplitudes()).norm() > 1e-3);

  for (Index d : {2, 3, 5}) {
    double mean = 0.0;
    const int n = 4000;
    for (int i = 0; i < n; ++i) mean += std::norm(random_pure(d, static_cast<std::uint64_t>(i)).amplitudes()(0));
    mean /= n;
    CHECK(mean == doctest::Approx(1.0 / static_cast<double>(d)).epsilon(0.05));
  }
}

TEST_CASE("product probes") {
  const auto a = random_pure(2, 1);
  const auto b = random_pure(3, 2);
  const auto ab = product_probe(a, b);
  CHECK(ab.dim_a() == 2);
  CHECK(ab.dim_b() == 3);
  CHECK(max_abs_diff(partial_trace(ab.density(), 2, 3, Subsystem::A), a.density()) < 1e-14);
}

TEST_CASE("probe parameterisation") {
  const std::vector<double> params{3.0, 0.0, 0.0, 4.0};
  const ComplexVector v = amplitudes_from_parameters(params);
  CHECK(distance(v, {0.6, {0.0, 0.8}}) < 1e-15);

  const auto s = single_from_parameters(params);
  CHECK(s.dim() == 2);

  std::vector<double> eight(8, 1.0);
  const auto b = bipartite_from_parameters(2, 2, eight);
  const double e = 1.0 / std::sqrt(8.0);
  CHECK(distance(b.amplitudes(), {{e, e}, {e, e}, {e, e}, {e, e}}) < 1e-15);
  CHECK(std::abs(b.amplitudes().norm() - 1.0) < 1e-15);

  CHECK_THROWS_AS(amplitudes_from_parameters(std::vector<double>{1.0, 2.0, 3.0}), DimensionError);
  CHECK_THROWS_AS(amplitudes_from_parameters(std::vector<double>(4, 0.0)), DomainError);
  CHECK_THROWS_AS(bipartite_from_parameters(2, 3, eight), DimensionError);
}

TEST_CASE("probe validation") {
  CHECK_THROWS_AS(SinglePureProbe(ComplexVector::Ones(2)), DomainError);
  CHECK_THROWS_AS(BipartitePureProbe(2, 2, ComplexVector::Ones(3) / std::sqrt(3.0)), DimensionError);
}
