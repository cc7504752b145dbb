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

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "chandisc/matcore.hpp"

namespace chandisc {

// Tolerances for trace preservation, complete positivity and state validity.
inline constexpr double kCptpTolerance = 1e-10;
inline constexpr double kStateTolerance = 1e-10;

struct ChannelLabel {
  std::string family = "custom";
  std::vector<std::pair<std::string, double>> params;
};

/// A CPTP map stored as a Kraus list; every K_i is dim_out x dim_in.
/// Construction validates trace preservation and Choi positivity, so a
/// Channel value is always a valid channel.
class Channel {
 public:
  Channel(Index dim_in, Index dim_out, std::vector<ComplexMatrix> kraus, ChannelLabel label = {});

  Index dim_in() const { return dim_in_; }
  Index dim_out() const { return dim_out_; }
  const std::vector<ComplexMatrix>& kraus() const { return kraus_; }
  const ChannelLabel& label() const { return label_; }

 private:
  Index dim_in_;
  Index dim_out_;
  std::vector<ComplexMatrix> kraus_;
  ChannelLabel label_;
};

struct CptpDiagnostics {
  double trace_residual;        // max |sum K^dagger K - I|
  double choi_min_eigenvalue;
  bool valid(double tol = kCptpTolerance) const {
    return trace_residual <= tol && choi_min_eigenvalue >= -tol;
  }
};

/// Checks a raw Kraus list without constructing a Channel.
CptpDiagnostics diagnose_kraus(Index dim_in, Index dim_out, const std::vector<ComplexMatrix>& kraus);

struct MixedUnitaryEnsemble {
  std::vector<ComplexMatrix> unitaries;
  std::vector<double> weights;

  // Throws DomainError on weights outside (0,1), sums off 1 by more than
  // 1e-12, or non-unitary members.
  void validate() const;
};

Channel make_depolarizing(Index d, double q);
Channel make_dephasing(Index d, double r);
Channel make_generalized_dephasing(const ComplexMatrix& u, double r);
Channel make_amplitude_damping(double mu);
Channel make_mixed_unitary(const MixedUnitaryEnsemble& ensemble);
Channel make_erasure(Index d, double eps);

/// Clock operator Z = sum_k w^k |k><k| with w = exp(2 pi i / d).
ComplexMatrix clock_matrix(Index d);
/// Shift operator X|k> = |k+1 mod d>.
ComplexMatrix shift_matrix(Index d);

// Qutrit mixed-unitary pair: the first ensemble is {identity, cyclic shift,
// reflection of |0>}, the second is {reverse cyclic shift, signed shift,
// signed reverse shift}. Some entangled probe separates them perfectly while no
// single-system probe does.
std::pair<MixedUnitaryEnsemble, MixedUnitaryEnsemble> qutrit_ensembles(const std::array<double, 3>& weights);
std::pair<Channel, Channel> make_qutrit_pair(const std::array<double, 3>& weights);

// Six-level pair built from transpositions: {id, (0 1), (0 2)} versus
// {(0 3), (0 4), (0 5)}. The probe |0> separates them perfectly while the
// maximally entangled probe cannot.
std::pair<MixedUnitaryEnsemble, MixedUnitaryEnsemble> six_level_ensembles(const std::array<double, 3>& weights);
std::pair<Channel, Channel> make_six_level_pair(const std::array<double, 3>& weights);

/// Checks that rho is square of side `dim`, Hermitian, unit trace and PSD.
void validate_state(const ComplexMatrix& rho, Index dim);

/// sum_i K_i rho K_i^dagger.
ComplexMatrix apply(const Channel& ch, const ComplexMatrix& rho);

/// sum_i (K_i (x) I) rho_ab (K_i (x) I)^dagger; channel acts on the first factor.
ComplexMatrix apply_on_A(const Channel& ch, const ComplexMatrix& rho_ab, Index dim_b);

/// (N (x) I)(|phi+><phi+|) with the normalised maximally entangled input.
ComplexMatrix choi(const Channel& ch);

}  // namespace chandisc
