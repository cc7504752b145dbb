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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "chandisc/channels.hpp"
#include "chandisc/closed_forms.hpp"
#include "chandisc/matcore.hpp"
#include "chandisc/probes.hpp"

namespace chandisc {

enum class ProbeClass { single, product, max_entangled, nonmax, general_entangled };
enum class Method { closed_form, optimizer, fixed_probe };

std::string_view to_string(ProbeClass c);
std::string_view to_string(Method m);

struct OptimizerOptions {
  int restarts = 32;
  int grid_density = 24;         // coarse Bloch grid points per angle (qubit single probes)
  double step_tolerance = 1e-7;
  int max_iterations = 5000;
  double initial_step = 0.3;
  std::uint64_t seed = 0;
  unsigned threads = 0;          // 0: one per hardware thread

  void validate() const;
};

struct OptimizerMeta {
  int restarts = 0;
  int best_restart = -1;
  long iterations = 0;      // summed over restarts
  long evaluations = 0;
  double final_step = 0.0;  // of the winning restart
  bool converged = false;   // winning restart reached the step tolerance
};

using ProbeValue = std::variant<std::monostate, SinglePureProbe, BipartitePureProbe>;

struct DiscriminationResult {
  double probability = 0.5;
  ProbeClass probe_class = ProbeClass::single;
  Method method = Method::fixed_probe;
  ProbeValue probe;
  std::string probe_params;  // e.g. "g=0.25" or "theta=1.6698"
  std::optional<OptimizerMeta> optimizer;
};

/// (1 + ||p1 rho1 - (1 - p1) rho2||_1) / 2.
double helstrom(const ComplexMatrix& rho1, const ComplexMatrix& rho2, double p1 = 0.5);

DiscriminationResult discrim_fixed_single(const Channel& ch1, const Channel& ch2, const SinglePureProbe& probe,
                                          double p1 = 0.5);

DiscriminationResult discrim_fixed_entangled(const Channel& ch1, const Channel& ch2,
                                             const BipartitePureProbe& probe, double p1 = 0.5,
                                             ProbeClass probe_class = ProbeClass::general_entangled);

/// Multistart compass search over pure single-system probes. `warm_starts`
/// are evaluated as additional restarts, so the result never falls below them.
DiscriminationResult optimize_single(const Channel& ch1, const Channel& ch2, const OptimizerOptions& opts = {},
                                     double p1 = 0.5, const std::vector<SinglePureProbe>& warm_starts = {});

/// As optimize_single over bipartite pure probes with dim_b = dim_in.
DiscriminationResult optimize_entangled(const Channel& ch1, const Channel& ch2, const OptimizerOptions& opts = {},
                                        double p1 = 0.5,
                                        const std::vector<BipartitePureProbe>& warm_starts = {});

/// Success probability for a pure probe given by its amplitudes, computed from
/// the low-rank factorisation of the output difference. The channel acts on
/// the first factor; dim_b = 1 for single-system probes. This is the
/// optimizer objective; it agrees with the fixed-probe route.
double probe_success_probability(const Channel& ch1, const Channel& ch2, const ComplexVector& amplitudes,
                                 Index dim_b, double p1 = 0.5);

struct UnitaryPair {
  ComplexMatrix v;
  ComplexMatrix w;
  double q;
};

/// Pairs (V_k, W_k, q_k) from two ensembles with shared weights.
std::vector<UnitaryPair> pair_ensembles(const MixedUnitaryEnsemble& first, const MixedUnitaryEnsemble& second);

/// Upper bound 2 sum_k q_k sqrt(1 - |<d|V_k^dagger W_k|d>|^2) on the output
/// trace-norm difference for a single probe |d>.
double mixed_unitary_single_bound(const std::vector<UnitaryPair>& pairs, const SinglePureProbe& probe);

/// Upper bound 2 sum_k q_k sqrt(1 - |Tr(V_k^dagger W_k)|^2 / d^2) on the output
/// trace-norm difference for the maximally entangled probe.
double mixed_unitary_maxent_bound(const std::vector<UnitaryPair>& pairs);

}  // namespace chandisc
