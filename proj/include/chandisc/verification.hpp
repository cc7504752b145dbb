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

// Scenario suite that checks every closed-form claim against fixed-probe
// evaluation and the multistart optimizer. Backs `chandisc verify` and the
// acceptance test binary.

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace chandisc {

inline constexpr int kCriterionCount = 10;

enum class Relation {
  within,      // |expected - computed| <= tolerance * scale
  at_most,     // computed <= expected + tolerance * scale
  less_than,   // computed < expected (strict, unscaled)
  greater_than // computed > expected (strict, unscaled)
};

std::string_view to_string(Relation r);

struct ScenarioReport {
  int criterion = 0;
  std::string id;
  std::string claim;
  Relation relation = Relation::within;
  double expected = 0.0;
  double computed = 0.0;
  double tolerance = 0.0;  // already multiplied by the tolerance scale
  bool passed = false;
  double runtime_ms = 0.0;
};

struct VerificationOptions {
  double tolerance_scale = 1.0;
  std::uint64_t seed = 0;
};

std::string_view criterion_title(int criterion);

/// Runs one criterion (1..kCriterionCount).
std::vector<ScenarioReport> run_criterion(int criterion, const VerificationOptions& opts);
std::vector<ScenarioReport> run_verification(const VerificationOptions& opts);

nlohmann::json reports_to_json(const std::vector<ScenarioReport>& reports);
void print_report_table(std::ostream& out, const std::vector<ScenarioReport>& reports);

}  // namespace chandisc
