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

#include "chandisc/pattern_search.hpp"

#include <cmath>

namespace chandisc {

PatternSearchResult maximize_compass(const Objective& f, RealVector start, const PatternSearchOptions& opts) {
  if (start.size() == 0) throw DimensionError("pattern search: empty starting point");
  if (!(opts.initial_step > 0.0) || !(opts.step_tolerance > 0.0) || opts.max_iterations <= 0) {
    throw DomainError("pattern search: step sizes and iteration cap must be positive");
  }
  const auto as_span = [](const RealVector& v) {
    return std::span<const double>(v.data(), static_cast<std::size_t>(v.size()));
  };

  PatternSearchResult res;
  res.x = std::move(start);
  if (opts.renormalize) res.x.normalize();
  res.value = f(as_span(res.x));
  res.evaluations = 1;

  const Index n = res.x.size();
  const Index directions = 2 * n;
  double step = opts.initial_step;
  Index resume = 0;
  RealVector trial(n);

  while (step >= opts.step_tolerance && res.iterations < opts.max_iterations) {
    ++res.iterations;
    bool improved = false;
    for (Index k = 0; k < directions; ++k) {
      const Index dir = (resume + k) % directions;
      trial = res.x;
      trial(dir / 2) += (dir % 2 == 0) ? step : -step;
      if (opts.renormalize) {
        const double norm = trial.norm();
        if (!(norm > 0.0)) continue;
        trial /= norm;
      }
      const double value = f(as_span(trial));
      ++res.evaluations;
      if (value > res.value) {
        res.x = trial;
        res.value = value;
        resume = dir;
        improved = true;
        break;
      }
    }
    if (!improved) step *= 0.5;
  }
  res.final_step = step;
  res.converged = step < opts.step_tolerance;
  return res;
}

}  // namespace chandisc
