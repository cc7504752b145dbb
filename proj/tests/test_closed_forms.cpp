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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <doctest.h>

#include "chandisc/closed_forms.hpp"
#include "chandisc/discrimination.hpp"

using namespace chandisc;
using doctest::Approx;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::array<double, 3> kThirds{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};

double hull(std::vector<double> phases) { return hull_min_distance(phases); }

}  // namespace

TEST_CASE("depolarizing closed forms") {
  CHECK(depolarizing_single_closed(2, 0.9, 0.3) == Approx(0.65).epsilon(1e-14));
  CHECK(depolarizing_single_closed(3, 0.9, 0.3) == Approx(0.7).epsilon(1e-14));
  CHECK(depolarizing_single_closed(4, 0.4, 0.4) == 0.5);
  CHECK(depolarizing_maxent_closed(2, 0.9, 0.3) == Approx(0.725).epsilon(1e-14));
  CHECK(depolarizing_maxent_closed(3, 0.9, 0.3) == Approx(0.5 * (1 + 0.6 * 8.0 / 9.0)).epsilon(1e-14));
  CHECK(depolarizing_maxent_closed(3, 0.2, 0.2) == 0.5);
  CHECK(depolarizing_single_closed(2, 0.3, 0.9) == depolarizing_single_closed(2, 0.9, 0.3));
}

TEST_CASE("depolarizing g-curve") {
  const auto half = depolarizing_qubit_g_norm(0.5, 0.9, 0.3);
  CHECK(half.norm == Approx(1.5).epsilon(1e-14));
  CHECK(half.probability == Approx(depolarizing_maxent_closed(2, 0.9, 0.3)).epsilon(1e-14));

  for (double g : {0.0, 1.0}) {
    const auto edge = depolarizing_qubit_g_norm(g, 0.9, 0.3);
    CHECK(edge.norm == Approx(1.0).epsilon(1e-14));
    CHECK(edge.probability == Approx(depolarizing_single_closed(2, 0.9, 0.3)).epsilon(1e-14));
  }

  const auto quarter = depolarizing_qubit_g_norm(0.25, 0.9, 0.3);
  CHECK(quarter.norm == Approx(1.4013878188659974).epsilon(1e-14));
  CHECK(quarter.probability == Approx(0.7102081728298996).epsilon(1e-14));

  double previous = 0.0;
  for (int i = 0; i <= 50; ++i) {
    const double value = depolarizing_qubit_g_norm(0.5 * i / 50.0, 0.9, 0.3).probability;
    CHECK(value > previous);
    previous = value;
  }
  CHECK(depolarizing_qubit_g_norm(0.3, 0.9, 0.3).norm == Approx(depolarizing_qubit_g_norm(0.7, 0.9, 0.3).norm));
  CHECK_THROWS_AS(depolarizing_qubit_g_norm(-0.1, 0.9, 0.3), DomainError);
}

TEST_CASE("dephasing closed form") {
  CHECK(dephasing_closed(0.9, 0.2) == Approx(0.85).epsilon(1e-14));
  CHECK(dephasing_closed(0.4, 0.4) == 0.5);
  CHECK(dephasing_closed(1 - 1e-12, 1e-12) == Approx(1.0).epsilon(1e-10));
}

TEST_CASE("convex hull distance") {
  CHECK(hull({0.0, kPi}) == Approx(0.0).epsilon(1e-15));
  CHECK(hull({0.0}) == Approx(1.0));
  CHECK(hull({kPi / 3, -kPi / 3}) == Approx(0.5).epsilon(1e-14));
  CHECK(hull({0.0, 2 * kPi / 3, 4 * kPi / 3}) == 0.0);
  CHECK(hull({0.0, 0.0, 1e-14}) == Approx(1.0));
  CHECK(hull({0.1, 0.2, 0.3}) == Approx(std::cos(0.1)).epsilon(1e-14));
  // Points wrapping through zero.
  CHECK(hull({2 * kPi - 0.2, 0.2}) == Approx(std::cos(0.2)).epsilon(1e-14));
  CHECK(hull({0.0, kPi / 2, kPi}) == Approx(0.0).epsilon(1e-15));
  CHECK_THROWS_AS(hull({}), DomainError);
}

TEST_CASE("convex hull distance matches a pairwise segment oracle") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> angle(0.0, 2 * kPi);
  std::uniform_int_distribution<int> count(1, 6);
  auto segment_distance = [](double a, double b) {
    const Eigen::Vector2d p(std::cos(a), std::sin(a));
    const Eigen::Vector2d q(std::cos(b), std::sin(b));
    const Eigen::Vector2d e = q - p;
    const double len2 = e.squaredNorm();
    const double t = len2 > 0 ? std::clamp(-p.dot(e) / len2, 0.0, 1.0) : 0.0;
    return (p + t * e).norm();
  };
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> phases(static_cast<std::size_t>(count(rng)));
    for (auto& p : phases) p = angle(rng) * (trial % 2 == 0 ? 0.4 : 1.0);
    // The origin is outside the hull iff some open half-plane holds every point.
    double support = -1.0;
    for (int k = 0; k < 3600; ++k) {
      double lowest = 1.0;
      for (double p : phases) lowest = std::min(lowest, std::cos(p - 2 * kPi * k / 3600.0));
      support = std::max(support, lowest);
    }
    double expected = 0.0;
    if (support > 1e-3) {
      expected = 1.0;
      for (double a : phases) {
        for (double b : phases) expected = std::min(expected, segment_distance(a, b));
      }
    }
    if (std::abs(support) <= 1e-3) continue;
    CHECK(hull_min_distance(phases) == Approx(expected).epsilon(1e-12).scale(1.0));
  }
}

TEST_CASE("generalized dephasing closed form") {
  for (Index d = 2; d <= 5; ++d) {
    CHECK(gen_dephasing_closed(clock_matrix(d), 0.9, 0.2) == Approx(dephasing_closed(0.9, 0.2)).epsilon(1e-12));
  }
  CHECK(gen_dephasing_closed(ComplexMatrix::Identity(3, 3), 0.9, 0.2) == Approx(0.5).epsilon(1e-14));
  ComplexMatrix u = ComplexMatrix::Identity(2, 2);
  u(1, 1) = std::polar(1.0, kPi / 3);
  CHECK(gen_dephasing_closed(u, 0.8, 0.2) == Approx(0.65).epsilon(1e-12));
  CHECK(gen_dephasing_closed(u, 0.7, 0.2) == Approx(0.5 * (1 + 0.5 * 0.5)).epsilon(1e-12));
}

TEST_CASE("amplitude damping single-probe closed form") {
  const auto strong = ad_single_closed(0.81, 0.36);
  CHECK(strong.probability == Approx(0.725).epsilon(1e-14));
  CHECK(strong.theta == Approx(kPi));

  const auto weak = ad_single_closed(0.04, 0.01);
  CHECK(weak.probability == Approx(0.526207120918048).epsilon(1e-13));
  CHECK(weak.theta == Approx(1.6698593718618788).epsilon(1e-13));

  const auto swapped = ad_single_closed(0.01, 0.04);
  CHECK(swapped.probability == weak.probability);
  CHECK(ad_single_closed(0.3, 0.3).probability == Approx(0.5));
}

TEST_CASE("amplitude damping maximally entangled closed form") {
  CHECK(ad_maxent_closed(0.81, 0.36) == Approx(0.65).epsilon(1e-14));
  CHECK(ad_maxent_closed(0.04, 0.01) == Approx(0.5290296855201959).epsilon(1e-14));
  CHECK(ad_maxent_closed(0.2, 0.2) == Approx(0.5));
}

TEST_CASE("amplitude damping Schmidt-probe closed form") {
  for (auto [mu1, mu2] : {std::pair{0.81, 0.36}, {0.04, 0.01}, {0.5, 0.1}}) {
    CHECK(std::abs(ad_nonmax_norm(0.5, mu1, mu2).probability - ad_maxent_closed(mu1, mu2)) < 1e-12);
  }
  const auto n = ad_nonmax_norm(0.1, 0.36, 0.09);
  CHECK(n.norm == Approx(0.5454053570954059).epsilon(1e-14));
  CHECK(n.norm > 2 * (0.36 - 0.09));
  CHECK(n.probability == Approx(0.5 * (1 + n.norm / 2)));
  CHECK(ad_nonmax_norm(1e-12, 0.36, 0.09).norm == Approx(0.54).epsilon(1e-5));

  CHECK(ad_nonmax_beats_single(0.1, 0.36, 0.09));
  CHECK_FALSE(ad_nonmax_beats_single(0.3, 0.36, 0.09));
  CHECK_FALSE(ad_nonmax_beats_single(0.1, 0.81, 0.36));
  CHECK_THROWS_AS(ad_nonmax_norm(1.0, 0.3, 0.2), DomainError);
}

TEST_CASE("erasure closed form") {
  CHECK(erasure_closed(0.8, 0.3) == Approx(0.75).epsilon(1e-14));
  CHECK(erasure_closed(0.3, 0.3) == 0.5);
}

TEST_CASE("mixed unitary bounds") {
  const auto [l, s] = qutrit_ensembles(kThirds);
  CHECK(mixed_unitary_maxent_bound(pair_ensembles(l, l)) == Approx(0.0));
  CHECK(mixed_unitary_single_bound(pair_ensembles(l, l), basis_state(3, 0)) == Approx(0.0));

  const auto ls = pair_ensembles(l, s);
  const double single0 = mixed_unitary_single_bound(ls, basis_state(3, 0));
  CHECK(single0 == Approx(4.0 / 3.0).epsilon(1e-14));
  const double ent = mixed_unitary_maxent_bound(ls);
  CHECK(ent < 2.0);
  CHECK(ent == Approx(2.0 / 3.0 * (2 + std::sqrt(8.0 / 9.0))).epsilon(1e-14));

  const auto [lb, sb] = six_level_ensembles(kThirds);
  const auto bar = pair_ensembles(lb, sb);
  CHECK(mixed_unitary_single_bound(bar, basis_state(6, 0)) == Approx(2.0).epsilon(1e-14));
  std::vector<double> traces;
  for (const auto& p : bar) traces.push_back(std::abs((p.v.adjoint() * p.w).trace()));
  CHECK(traces == std::vector<double>{4.0, 3.0, 3.0});
  const double bar_ent = mixed_unitary_maxent_bound(bar);
  CHECK(bar_ent < 2.0);
  CHECK(0.5 + bar_ent / 4 < 1 - 1e-3);

  CHECK_THROWS_AS(mixed_unitary_single_bound(ls, basis_state(2, 0)), DimensionError);
}
