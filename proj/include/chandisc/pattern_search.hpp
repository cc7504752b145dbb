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

#include <functional>
#include <span>

#include "chandisc/matcore.hpp"

namespace chandisc {

struct PatternSearchOptions {
  double initial_step = 0.3;
  double step_tolerance = 1e-7;
  int max_iterations = 5000;
  // Rescale every trial point to unit Euclidean norm. Valid for objectives
  // that only depend on the direction of x.
  bool renormalize = false;
};

struct PatternSearchResult {
  RealVector x;
  double value = 0.0;
  int iterations = 0;
  long evaluations = 0;
  double final_step = 0.0;
  bool converged = false;  // step fell below the tolerance
};

using Objective = std::function<double(std::span<const double>)>;

/// Compass search maximising `f` from `start`. Each iteration polls the 2n
/// coordinate directions (opportunistically, resuming from the last successful
/// direction); a poll without strict improvement halves the step.
PatternSearchResult maximize_compass(const Objective& f, RealVector start, const PatternSearchOptions& opts);

}  // namespace chandisc
