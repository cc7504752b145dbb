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

// Closed-form single-shot success probabilities for equal priors. All
// functions are symmetric in the two noise parameters.

#include <cstdint>
#include <span>

#include "chandisc/matcore.hpp"

namespace chandisc {

/// A trace-norm quantity together with the success probability it implies.
struct NormedProbability {
  double norm;
  double probability;
};

struct AngleOptimum {
  double probability;
  double theta;  // polar angle of the optimal Bloch vector
};

/// Any pure single-system probe: (1 + |q1 - q2| (1 - 1/d)) / 2.
double depolarizing_single_closed(Index d, double q1, double q2);

/// Maximally entangled probe: (1 + |q1 - q2| (1 - 1/d^2)) / 2.
double depolarizing_maxent_closed(Index d, double q1, double q2);

/// Qubit depolarizing pair probed with sqrt(g)|00> + e^{iz} sqrt(1-g)|11>.
/// `norm` is the trace norm of |phi><phi| - I/2 (x) Tr_A|phi><phi|, which is
/// 1/2 + sqrt(1 + 12 g (1-g)) / 2; the output difference is |q1 - q2| times it.
NormedProbability depolarizing_qubit_g_norm(double g, double q1, double q2);

double dephasing_closed(double r1, double r2);

/// Distance from the origin to the convex hull of {exp(i phase)}. Zero when
/// the origin lies inside or on the hull.
double hull_min_distance(std::span<const double> phases);

/// Generalised dephasing rho -> r rho + (1-r) U rho U^dagger, optimal probe.
/// The eigenphases of u are obtained with unitary_eigenphases(u, seed).
double gen_dephasing_closed(const ComplexMatrix& u, double r1, double r2, std::uint64_t seed = 0);

/// Best single-system probe for two amplitude-damping channels. Two regimes
/// split at (sqrt(mu1) + sqrt(mu2))^2 = 1/2; the boundary belongs to the
/// theta = pi branch.
AngleOptimum ad_single_closed(double mu1, double mu2);

double ad_maxent_closed(double mu1, double mu2);

/// Amplitude damping probed with sqrt(p)|00> + sqrt(1-p)|11>; `norm` is the
/// trace norm of the output difference.
NormedProbability ad_nonmax_norm(double p, double mu1, double mu2);

/// (sqrt(mu1) + sqrt(mu2))^2 < 1 - p: the Schmidt probe with weight p beats
/// the theta = pi single-system probe.
bool ad_nonmax_beats_single(double p, double mu1, double mu2);

/// Any probe, single or bipartite: (1 + |eps1 - eps2|) / 2.
double erasure_closed(double eps1, double eps2);

}  // namespace chandisc
