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

// Named channel families, the probe-class grammar and parameter sweeps that
// back the command-line front end.

#include <array>
#include <complex>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "chandisc/discrimination.hpp"

namespace chandisc {

/// Shortest decimal string that parses back to the same double.
std::string format_double(double value);

struct FamilySpec {
  std::string family;                    // depolarizing, dephasing, gen-dephasing, amplitude-damping,
                                         // erasure, mixed-unitary-d3, mixed-unitary-d6
  std::map<std::string, double> params;  // d, q1, q2, r1, r2, mu1, mu2, eps1, eps2, g, p
  std::vector<double> u_phases;          // gen-dephasing: u = diag(exp(i phase_k))
  std::array<double, 3> weights{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
};

std::pair<Channel, Channel> build_channel_pair(const FamilySpec& spec);

enum class ProbeKind {
  single,          // basis state |k>
  product,         // |0>|0>
  maxent,
  nonmax,          // sqrt(g)|00> + sqrt(1-g)|11>
  schmidt,         // sqrt(p)|00> + sqrt(1-p)|11>
  zeta,
  optimize_single,
  optimize_ent,
  single_closed,
  maxent_closed,
  nonmax_closed,   // qubit depolarizing, weight g
  schmidt_closed,  // amplitude damping, weight p
};

struct ProbeSpec {
  ProbeKind kind = ProbeKind::single;
  std::string text;               // as written on the command line
  Index basis_index = 0;
  std::optional<double> weight;   // g or p; falls back to the family parameters
  std::complex<double> c1{0.5, 0.0};
  std::complex<double> c2{0.5, 0.0};
};

/// Grammar: single | single:|k> | product | maxent | nonmax[:g=x] |
/// schmidt[:p=x] | zeta:c1=re,im,c2=re,im | optimize-single | optimize-ent |
/// single-closed | maxent-closed | nonmax-closed[:g=x] | schmidt-closed[:p=x].
/// Throws DomainError on anything else.
ProbeSpec parse_probe_class(const std::string& text);

/// Evaluates a named family under one probe class.
DiscriminationResult evaluate_family(const FamilySpec& spec, const ProbeSpec& probe, double p1,
                                     const OptimizerOptions& opts);

/// Evaluates an explicit channel pair; closed-form classes are rejected.
DiscriminationResult evaluate_channels(const Channel& ch1, const Channel& ch2, const ProbeSpec& probe, double p1,
                                       const OptimizerOptions& opts);

struct SweepRange {
  std::string name;
  double start = 0.0;
  double stop = 0.0;
  double step = 1.0;

  std::vector<double> values() const;
};

/// Parses "name=start:stop:step".
SweepRange parse_sweep_range(const std::string& text);

struct SweepSpec {
  FamilySpec base;
  std::vector<SweepRange> ranges;  // one or two
  std::vector<std::string> probe_classes;
};

struct SweepRow {
  std::string family;
  double param1 = 0.0;
  std::optional<double> param2;
  std::string probe_class;
  double probability = 0.0;
  std::string probe_params;
};

/// Rows ordered lexicographically by parameter values, then probe class.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, const OptimizerOptions& opts);

/// Header `family,param1,param2,probe_class,probability,probe_params`, '\n' endings.
void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out);

}  // namespace chandisc
