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
#include <complex>
#include <numbers>
#include <vector>

#include "chandisc/closed_forms.hpp"

namespace chandisc {

namespace {

double wrap_angle(double phase) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double w = std::fmod(phase, two_pi);
  if (w < 0.0) w += two_pi;
  return w >= two_pi ? 0.0 : w;
}

double segment_distance_to_origin(std::complex<double> a, std::complex<double> b) {
  const std::complex<double> ab = b - a;
  const double len_sq = std::norm(ab);
  if (len_sq == 0.0) return std::abs(a);
  // projection of the origin onto the line through a and b
  const double t = std::clamp(-(a.real() * ab.real() + a.imag() * ab.imag()) / len_sq, 0.0, 1.0);
  return std::abs(a + t * ab);
}

}  // namespace

double hull_min_distance(std::span<const double> phases) {
  if (phases.empty()) throw DomainError("hull_min_distance: no phases given");
  std::vector<double> angles;
  angles.reserve(phases.size());
  for (double p : phases) angles.push_back(wrap_angle(p));
  std::sort(angles.begin(), angles.end());
  angles.erase(std::unique(angles.begin(), angles.end(), [](double x, double y) { return y - x <= 1e-12; }),
               angles.end());
  constexpr double two_pi = 2.0 * std::numbers::pi;
  if (angles.size() > 1 && angles.back() - angles.front() >= two_pi - 1e-12) angles.pop_back();
  if (angles.size() == 1) return 1.0;

  // Largest angular gap between consecutive points (circularly). If it is at
  // most pi the points are not contained in any open half-plane, so the hull
  // holds the origin. Otherwise the nearest hull point lies on the chord that
  // spans the gap.
  std::size_t gap_start = angles.size() - 1;
  double largest_gap = angles.front() + two_pi - angles.back();
  for (std::size_t i = 0; i + 1 < angles.size(); ++i) {
    const double gap = angles[i + 1] - angles[i];
    if (gap > largest_gap) {
      largest_gap = gap;
      gap_start = i;
    }
  }
  if (largest_gap <= std::numbers::pi) return 0.0;
  const double from = angles[gap_start];
  const double to = angles[(gap_start + 1) % angles.size()];
  return segment_distance_to_origin(std::polar(1.0, from), std::polar(1.0, to));
}

}  // namespace chandisc
