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

// Runs every acceptance criterion at its stated tolerance and prints one
// PASS/FAIL line per criterion. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <iostream>

#include "chandisc/evaluation.hpp"
#include "chandisc/verification.hpp"

int main() {
  using namespace chandisc;
  int failed = 0;
  for (int c = 1; c <= kCriterionCount; ++c) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto reports = run_criterion(c, {});
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    std::size_t passed = 0;
    for (const auto& r : reports) passed += r.passed ? 1 : 0;
    const bool ok = !reports.empty() && passed == reports.size();
    if (!ok) ++failed;
    std::printf("%s criterion %2d: %-40s %zu/%zu checks  %8.1f ms\n", ok ? "PASS" : "FAIL", c,
                std::string(criterion_title(c)).c_str(), passed, reports.size(), ms);
    for (const auto& r : reports) {
      if (r.passed) continue;
      std::printf("     %s: expected %s %s, computed %s (tol %.1e) | %s\n", r.id.c_str(),
                  std::string(to_string(r.relation)).c_str(), format_double(r.expected).c_str(),
                  format_double(r.computed).c_str(), r.tolerance, r.claim.c_str());
    }
  }
  std::printf("%d of %d criteria failed\n", failed, kCriterionCount);
  return failed == 0 ? 0 : 1;
}
