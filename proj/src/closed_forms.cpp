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

#include "chandisc/closed_forms.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>
#include <vector>

namespace chandisc {

namespace {

void require_open_unit(double value, const char* name) {
  if (!(value > 0.0 && value < 1.0)) {
    std::ostringstream os;
    os << name << " must lie in the open interval (0,1), got " << value;
    throw DomainError(os.str());
  }
}

void require_pair(double a, double b, const char* name) {
  require_open_unit(a, name);
  require_open_unit(b, name);
}

}  // namespace

double depolarizing_single_closed(Index d, double q1, double q2) {
  if (d < 2) throw DomainError("depolarizing: dimension must be at least 2");
  require_pair(q1, q2, "q");
  return 0.5 * (1.0 + std::abs(q1 - q2) * (1.0 - 1.0 / static_cast<double>(d)));
}

double depolarizing_maxent_closed(Index d, double q1, double q2) {
  if (d < 2) throw DomainError("depolarizing: dimension must be at least 2");
  require_pair(q1, q2, "q");
  const double dd = static_cast<double>(d);
  return 0.5 * (1.0 + std::abs(q1 - q2) * (1.0 - 1.0 / (dd * dd)));
}

NormedProbability depolarizing_qubit_g_norm(double g, double q1, double q2) {
  if (!(g >= 0.0 && g <= 1.0)) throw DomainError("g must lie in [0,1]");
  require_pair(q1, q2, "q");
  const double norm = 0.5 + 0.5 * std::sqrt(1.0 + 12.0 * g * (1.0 - g));
  return {norm, 0.5 * (1.0 + 0.5 * std::abs(q1 - q2) * norm)};
}

double dephasing_closed(double r1, double r2) {
  require_pair(r1, r2, "r");
  return 0.5 * (1.0 + std::abs(r1 - r2));
}

double gen_dephasing_closed(const ComplexMatrix& u, double r1, double r2, std::uint64_t seed) {
  require_pair(r1, r2, "r");
  const auto spectrum = unitary_eigenphases(u, seed);
  std::vector<double> phases;
  phases.reserve(spectrum.size());
  for (const auto& e : spectrum) phases.push_back(e.phase);
  const double h = hull_min_distance(phases);
  return 0.5 * (1.0 + std::abs(r1 - r2) * std::sqrt(std::max(0.0, 1.0 - h * h)));
}

AngleOptimum ad_single_closed(double mu1, double mu2) {
  require_pair(mu1, mu2, "mu");
  if (mu1 < mu2) std::swap(mu1, mu2);
  const double s1 = std::sqrt(mu1);
  const double s2 = std::sqrt(mu2);
  const double sum_sq = (s1 + s2) * (s1 + s2);
  if (sum_sq >= 0.5) return {0.5 * (1.0 + (mu1 - mu2)), std::numbers::pi};
  const double norm = (s1 - s2) / std::sqrt(1.0 - sum_sq);
  const double theta = 2.0 * std::asin(std::sqrt(1.0 / (2.0 * (1.0 - sum_sq))));
  return {0.5 * (1.0 + 0.5 * norm), theta};
}

double ad_maxent_closed(double mu1, double mu2) {
  require_pair(mu1, mu2, "mu");
  if (mu1 < mu2) std::swap(mu1, mu2);
  const double diff = mu1 - mu2;
  const double root_diff = std::sqrt(mu1) - std::sqrt(mu2);
  return 0.5 * (1.0 + 0.25 * diff + 0.25 * std::sqrt(diff * diff + 4.0 * root_diff * root_diff));
}

NormedProbability ad_nonmax_norm(double p, double mu1, double mu2) {
  require_open_unit(p, "p");
  require_pair(mu1, mu2, "mu");
  if (mu1 < mu2) std::swap(mu1, mu2);
  const double diff = mu1 - mu2;
  const double root_diff = std::sqrt(mu1) - std::sqrt(mu2);
  const double norm =
      (1.0 - p) * diff + (1.0 - p) * std::sqrt(diff * diff + 4.0 * (p / (1.0 - p)) * root_diff * root_diff);
  return {norm, 0.5 * (1.0 + 0.5 * norm)};
}

bool ad_nonmax_beats_single(double p, double mu1, double mu2) {
  require_open_unit(p, "p");
  require_pair(mu1, mu2, "mu");
  const double s = std::sqrt(mu1) + std::sqrt(mu2);
  return s * s < 1.0 - p;
}

double erasure_closed(double eps1, double eps2) {
  require_pair(eps1, eps2, "eps");
  return 0.5 * (1.0 + std::abs(eps1 - eps2));
}

}  // namespace chandisc
