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

#include "chandisc/channels.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace chandisc {

namespace {

void require_open_unit(double value, const char* name) {
  if (!(value > 0.0 && value < 1.0)) {
    std::ostringstream os;
    os << name << " must lie in the open interval (0,1), got " << value;
    throw DomainError(os.str());
  }
}

void require_dimension(Index d, const char* what) {
  if (d < 2) throw DomainError(std::string(what) + ": dimension must be at least 2");
}

ComplexMatrix basis_map(Index d, std::initializer_list<std::tuple<Index, Index, double>> entries) {
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  for (const auto& [row, col, value] : entries) m(row, col) = value;
  return m;
}

ComplexMatrix transposition(Index d, Index a, Index b) {
  ComplexMatrix m = ComplexMatrix::Identity(d, d);
  m(a, a) = m(b, b) = 0.0;
  m(a, b) = m(b, a) = 1.0;
  return m;
}

ComplexMatrix choi_of(Index dim_in, Index dim_out, const std::vector<ComplexMatrix>& kraus) {
  // (K (x) I)|phi+> is vec(K)/sqrt(d) with row index (out * dim_in + in).
  ComplexMatrix out = ComplexMatrix::Zero(dim_out * dim_in, dim_out * dim_in);
  ComplexVector column(dim_out * dim_in);
  for (const auto& k : kraus) {
    for (Index o = 0; o < dim_out; ++o)
      for (Index i = 0; i < dim_in; ++i) column(o * dim_in + i) = k(o, i);
    out.noalias() += column * column.adjoint();
  }
  return out / static_cast<double>(dim_in);
}

}  // namespace

CptpDiagnostics diagnose_kraus(Index dim_in, Index dim_out, const std::vector<ComplexMatrix>& kraus) {
  if (dim_in < 1 || dim_out < 1) throw DimensionError("channel dimensions must be positive");
  if (kraus.empty()) throw DimensionError("channel needs at least one Kraus operator");
  ComplexMatrix gram = ComplexMatrix::Zero(dim_in, dim_in);
  for (const auto& k : kraus) {
    if (k.rows() != dim_out || k.cols() != dim_in) {
      throw DimensionError("Kraus operator is " + std::to_string(k.rows()) + "x" +
                           std::to_string(k.cols()) + ", expected " + std::to_string(dim_out) + "x" +
                           std::to_string(dim_in));
    }
    gram.noalias() += k.adjoint() * k;
  }
  CptpDiagnostics diag{};
  diag.trace_residual = (gram - ComplexMatrix::Identity(dim_in, dim_in)).cwiseAbs().maxCoeff();
  diag.choi_min_eigenvalue = hermitian_eigenvalues(choi_of(dim_in, dim_out, kraus)).minCoeff();
  return diag;
}

Channel::Channel(Index dim_in, Index dim_out, std::vector<ComplexMatrix> kraus, ChannelLabel label)
    : dim_in_(dim_in), dim_out_(dim_out), kraus_(std::move(kraus)), label_(std::move(label)) {
  const CptpDiagnostics diag = diagnose_kraus(dim_in_, dim_out_, kraus_);
  if (!diag.valid()) {
    std::ostringstream os;
    os.precision(3);
    os << "Kraus set is not CPTP: trace residual " << diag.trace_residual
       << ", minimum Choi eigenvalue " << diag.choi_min_eigenvalue;
    throw CptpError(os.str(), diag.trace_residual, diag.choi_min_eigenvalue);
  }
}

void MixedUnitaryEnsemble::validate() const {
  if (unitaries.empty() || unitaries.size() != weights.size()) {
    throw DomainError("mixed-unitary ensemble needs one weight per unitary");
  }
  double total = 0.0;
  for (double w : weights) {
    require_open_unit(w, "ensemble weight");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-12) throw DomainError("ensemble weights must sum to 1");
  const Index d = unitaries.front().rows();
  for (const auto& u : unitaries) {
    if (u.rows() != d || u.cols() != d) throw DimensionError("ensemble unitaries differ in shape");
    if (!(unitarity_deviation(u) <= kUnitaryTolerance)) throw DomainError("ensemble member is not unitary");
  }
}

ComplexMatrix clock_matrix(Index d) {
  ComplexMatrix z = ComplexMatrix::Zero(d, d);
  for (Index k = 0; k < d; ++k) {
    z(k, k) = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(d));
  }
  // exact signs for the qubit case
  if (d == 2) z(1, 1) = -1.0;
  return z;
}

ComplexMatrix shift_matrix(Index d) {
  ComplexMatrix x = ComplexMatrix::Zero(d, d);
  for (Index k = 0; k < d; ++k) x((k + 1) % d, k) = 1.0;
  return x;
}

Channel make_depolarizing(Index d, double q) {
  require_dimension(d, "depolarizing");
  require_open_unit(q, "q");
  const double dd = static_cast<double>(d * d);
  const ComplexMatrix x = shift_matrix(d);
  const ComplexMatrix z = clock_matrix(d);
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(static_cast<std::size_t>(d * d));
  ComplexMatrix xa = ComplexMatrix::Identity(d, d);
  for (Index a = 0; a < d; ++a) {
    ComplexMatrix weyl = xa;
    for (Index b = 0; b < d; ++b) {
      const double weight = (a == 0 && b == 0) ? q + (1.0 - q) / dd : (1.0 - q) / dd;
      kraus.push_back(std::sqrt(weight) * weyl);
      weyl = weyl * z;
    }
    xa = xa * x;
  }
  return Channel(d, d, std::move(kraus), {"depolarizing", {{"d", double(d)}, {"q", q}}});
}

Channel make_dephasing(Index d, double r) {
  require_dimension(d, "dephasing");
  require_open_unit(r, "r");
  std::vector<ComplexMatrix> kraus{std::sqrt(r) * ComplexMatrix::Identity(d, d),
                                   std::sqrt(1.0 - r) * clock_matrix(d)};
  return Channel(d, d, std::move(kraus), {"dephasing", {{"d", double(d)}, {"r", r}}});
}

Channel make_generalized_dephasing(const ComplexMatrix& u, double r) {
  if (u.rows() != u.cols() || u.rows() < 1) throw DimensionError("generalized dephasing: u must be square");
  if (!(unitarity_deviation(u) <= kUnitaryTolerance)) throw DomainError("generalized dephasing: u is not unitary");
  require_open_unit(r, "r");
  const Index d = u.rows();
  std::vector<ComplexMatrix> kraus{std::sqrt(r) * ComplexMatrix::Identity(d, d), std::sqrt(1.0 - r) * u};
  return Channel(d, d, std::move(kraus), {"gen-dephasing", {{"d", double(d)}, {"r", r}}});
}

Channel make_amplitude_damping(double mu) {
  require_open_unit(mu, "mu");
  ComplexMatrix h0 = ComplexMatrix::Zero(2, 2);
  h0(0, 0) = 1.0;
  h0(1, 1) = std::sqrt(mu);
  ComplexMatrix h1 = ComplexMatrix::Zero(2, 2);
  h1(0, 1) = std::sqrt(1.0 - mu);
  return Channel(2, 2, {h0, h1}, {"amplitude-damping", {{"mu", mu}}});
}

Channel make_mixed_unitary(const MixedUnitaryEnsemble& ensemble) {
  ensemble.validate();
  const Index d = ensemble.unitaries.front().rows();
  std::vector<ComplexMatrix> kraus;
  ChannelLabel label{"mixed-unitary", {}};
  for (std::size_t k = 0; k < ensemble.unitaries.size(); ++k) {
    kraus.push_back(std::sqrt(ensemble.weights[k]) * ensemble.unitaries[k]);
    label.params.emplace_back("q" + std::to_string(k + 1), ensemble.weights[k]);
  }
  return Channel(d, d, std::move(kraus), std::move(label));
}

Channel make_erasure(Index d, double eps) {
  require_dimension(d, "erasure");
  require_open_unit(eps, "eps");
  std::vector<ComplexMatrix> kraus;
  ComplexMatrix embed = ComplexMatrix::Zero(d + 1, d);
  embed.topRows(d).setIdentity();
  kraus.push_back(std::sqrt(eps) * embed);
  for (Index i = 0; i < d; ++i) {
    ComplexMatrix flag = ComplexMatrix::Zero(d + 1, d);
    flag(d, i) = std::sqrt(1.0 - eps);
    kraus.push_back(std::move(flag));
  }
  return Channel(d, d + 1, std::move(kraus), {"erasure", {{"d", double(d)}, {"eps", eps}}});
}

std::pair<MixedUnitaryEnsemble, MixedUnitaryEnsemble> qutrit_ensembles(const std::array<double, 3>& weights) {
  const std::vector<double> w(weights.begin(), weights.end());
  MixedUnitaryEnsemble first{{ComplexMatrix::Identity(3, 3),
                              basis_map(3, {{1, 0, 1.0}, {2, 1, 1.0}, {0, 2, 1.0}}),
                              basis_map(3, {{0, 0, -1.0}, {1, 1, 1.0}, {2, 2, 1.0}})},
                             w};
  MixedUnitaryEnsemble second{{basis_map(3, {{2, 0, 1.0}, {0, 1, 1.0}, {1, 2, 1.0}}),
                               basis_map(3, {{1, 0, -1.0}, {2, 1, 1.0}, {0, 2, 1.0}}),
                               basis_map(3, {{2, 0, -1.0}, {0, 1, 1.0}, {1, 2, 1.0}})},
                              w};
  first.validate();
  second.validate();
  return {std::move(first), std::move(second)};
}

std::pair<MixedUnitaryEnsemble, MixedUnitaryEnsemble> six_level_ensembles(const std::array<double, 3>& weights) {
  const std::vector<double> w(weights.begin(), weights.end());
  MixedUnitaryEnsemble first{{ComplexMatrix::Identity(6, 6), transposition(6, 0, 1), transposition(6, 0, 2)}, w};
  MixedUnitaryEnsemble second{{transposition(6, 0, 3), transposition(6, 0, 4), transposition(6, 0, 5)}, w};
  first.validate();
  second.validate();
  return {std::move(first), std::move(second)};
}

std::pair<Channel, Channel> make_qutrit_pair(const std::array<double, 3>& weights) {
  const auto [first, second] = qutrit_ensembles(weights);
  return {make_mixed_unitary(first), make_mixed_unitary(second)};
}

std::pair<Channel, Channel> make_six_level_pair(const std::array<double, 3>& weights) {
  const auto [first, second] = six_level_ensembles(weights);
  return {make_mixed_unitary(first), make_mixed_unitary(second)};
}

void validate_state(const ComplexMatrix& rho, Index dim) {
  if (rho.rows() != dim || rho.cols() != dim) {
    throw DimensionError("state is " + std::to_string(rho.rows()) + "x" + std::to_string(rho.cols()) +
                         ", expected " + std::to_string(dim) + "x" + std::to_string(dim));
  }
  if (!(hermitian_deviation(rho) <= kStateTolerance)) throw DomainError("state is not Hermitian");
  if (!(std::abs(rho.trace() - 1.0) <= kStateTolerance)) throw DomainError("state does not have unit trace");
  if (!(hermitian_eigenvalues(rho).minCoeff() >= -kStateTolerance)) {
    throw DomainError("state is not positive semidefinite");
  }
}

ComplexMatrix apply(const Channel& ch, const ComplexMatrix& rho) {
  validate_state(rho, ch.dim_in());
  ComplexMatrix out = ComplexMatrix::Zero(ch.dim_out(), ch.dim_out());
  for (const auto& k : ch.kraus()) out.noalias() += k * rho * k.adjoint();
  return out;
}

ComplexMatrix apply_on_A(const Channel& ch, const ComplexMatrix& rho_ab, Index dim_b) {
  if (dim_b < 1) throw DimensionError("apply_on_A: dim_b must be positive");
  validate_state(rho_ab, ch.dim_in() * dim_b);
  const ComplexMatrix id_b = ComplexMatrix::Identity(dim_b, dim_b);
  ComplexMatrix out = ComplexMatrix::Zero(ch.dim_out() * dim_b, ch.dim_out() * dim_b);
  for (const auto& k : ch.kraus()) {
    const ComplexMatrix lifted = tensor(k, id_b);
    out.noalias() += lifted * rho_ab * lifted.adjoint();
  }
  return out;
}

ComplexMatrix choi(const Channel& ch) { return choi_of(ch.dim_in(), ch.dim_out(), ch.kraus()); }

}  // namespace chandisc
