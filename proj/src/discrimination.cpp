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

#include "chandisc/discrimination.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <thread>

#include "chandisc/pattern_search.hpp"

namespace chandisc {

namespace {

using RowMajorMatrix = Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

void require_prior(double p1) {
  if (!(p1 >= 0.0 && p1 <= 1.0)) throw DomainError("prior p1 must lie in [0,1]");
}

void require_compatible(const Channel& ch1, const Channel& ch2) {
  if (ch1.dim_in() != ch2.dim_in() || ch1.dim_out() != ch2.dim_out()) {
    throw DimensionError("channels differ in input or output dimension");
  }
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finaliser
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

RealVector parameters_of(const ComplexVector& amplitudes) {
  const Index n = amplitudes.size();
  RealVector x(2 * n);
  x.head(n) = amplitudes.real();
  x.tail(n) = amplitudes.imag();
  return x;
}

RealVector random_parameters(Index n_amplitudes, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  RealVector x(2 * n_amplitudes);
  for (Index i = 0; i < x.size(); ++i) x(i) = normal(rng);
  return x.normalized();
}

std::string bloch_angles(const ComplexVector& a) {
  const double theta = 2.0 * std::acos(std::clamp(std::abs(a(0)), 0.0, 1.0));
  double delta = std::arg(a(1)) - std::arg(a(0));
  if (delta < 0.0) delta += 2.0 * std::numbers::pi;
  std::ostringstream os;
  os.precision(12);
  os << "theta=" << theta << ";delta=" << delta;
  return os.str();
}

struct Multistart {
  RealVector best_x;
  double best_value = 0.0;
  OptimizerMeta meta;
};

Multistart run_multistart(const Objective& objective, const std::vector<RealVector>& starts,
                          const OptimizerOptions& opts) {
  PatternSearchOptions ps;
  ps.initial_step = opts.initial_step;
  ps.step_tolerance = opts.step_tolerance;
  ps.max_iterations = opts.max_iterations;
  ps.renormalize = true;

  std::vector<PatternSearchResult> results(starts.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < starts.size(); i = next++) {
      results[i] = maximize_compass(objective, starts[i], ps);
    }
  };
  unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, starts.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  // merge by max; ties go to the lowest restart index
  Multistart out;
  out.meta.restarts = static_cast<int>(starts.size());
  for (std::size_t i = 0; i < results.size(); ++i) {
    out.meta.iterations += results[i].iterations;
    out.meta.evaluations += results[i].evaluations;
    if (out.meta.best_restart < 0 || results[i].value > out.best_value) {
      out.best_value = results[i].value;
      out.meta.best_restart = static_cast<int>(i);
    }
  }
  const auto& best = results[static_cast<std::size_t>(out.meta.best_restart)];
  out.best_x = best.x;
  out.meta.final_step = best.final_step;
  out.meta.converged = best.converged;
  return out;
}

}  // namespace

std::string_view to_string(ProbeClass c) {
  switch (c) {
    case ProbeClass::single: return "single";
    case ProbeClass::product: return "product";
    case ProbeClass::max_entangled: return "max_entangled";
    case ProbeClass::nonmax: return "nonmax";
    case ProbeClass::general_entangled: return "general_entangled";
  }
  return "unknown";
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::closed_form: return "closed_form";
    case Method::optimizer: return "optimizer";
    case Method::fixed_probe: return "fixed_probe";
  }
  return "unknown";
}

void OptimizerOptions::validate() const {
  if (restarts <= 0 || grid_density <= 0 || max_iterations <= 0 || !(step_tolerance > 0.0) ||
      !(initial_step > 0.0)) {
    throw DomainError("optimizer options must be positive");
  }
}

double helstrom(const ComplexMatrix& rho1, const ComplexMatrix& rho2, double p1) {
  if (rho1.rows() != rho1.cols() || rho1.rows() != rho2.rows() || rho1.cols() != rho2.cols()) {
    throw DimensionError("helstrom: states differ in dimension");
  }
  require_prior(p1);
  const ComplexMatrix diff = p1 * rho1 - (1.0 - p1) * rho2;
  return 0.5 * (1.0 + trace_norm_hermitian(symmetrized(diff)));
}

DiscriminationResult discrim_fixed_single(const Channel& ch1, const Channel& ch2, const SinglePureProbe& probe,
                                          double p1) {
  require_compatible(ch1, ch2);
  if (probe.dim() != ch1.dim_in()) throw DimensionError("probe dimension does not match channel input");
  const ComplexMatrix rho = probe.density();
  DiscriminationResult res;
  res.probability = helstrom(apply(ch1, rho), apply(ch2, rho), p1);
  res.probe_class = ProbeClass::single;
  res.method = Method::fixed_probe;
  res.probe = probe;
  return res;
}

DiscriminationResult discrim_fixed_entangled(const Channel& ch1, const Channel& ch2,
                                             const BipartitePureProbe& probe, double p1, ProbeClass probe_class) {
  require_compatible(ch1, ch2);
  if (probe.dim_a() != ch1.dim_in()) throw DimensionError("probe dim_a does not match channel input");
  const ComplexMatrix rho = probe.density();
  DiscriminationResult res;
  res.probability = helstrom(apply_on_A(ch1, rho, probe.dim_b()), apply_on_A(ch2, rho, probe.dim_b()), p1);
  res.probe_class = probe_class;
  res.method = Method::fixed_probe;
  res.probe = probe;
  return res;
}

double probe_success_probability(const Channel& ch1, const Channel& ch2, const ComplexVector& amplitudes,
                                 Index dim_b, double p1) {
  require_compatible(ch1, ch2);
  const Index d_in = ch1.dim_in();
  if (dim_b < 1 || amplitudes.size() != d_in * dim_b) throw DimensionError("probe size does not match channels");
  const Index n = ch1.dim_out() * dim_b;
  const auto r = static_cast<Index>(ch1.kraus().size() + ch2.kraus().size());

  // Output difference = M S M^dagger with columns sqrt(prior) (K (x) I)|psi>
  // and signature S = diag(+1.., -1..).
  const Eigen::Map<const RowMajorMatrix> psi(amplitudes.data(), d_in, dim_b);
  ComplexMatrix m(n, r);
  RealVector signs(r);
  Index col = 0;
  RowMajorMatrix image;
  for (const auto* ch : {&ch1, &ch2}) {
    const double weight = std::sqrt(ch == &ch1 ? p1 : 1.0 - p1);
    const double sign = ch == &ch1 ? 1.0 : -1.0;
    for (const auto& k : ch->kraus()) {
      image.noalias() = k * psi;
      m.col(col) = weight * Eigen::Map<const ComplexVector>(image.data(), n);
      signs(col) = sign;
      ++col;
    }
  }

  double norm = 0.0;
  if (r >= n) {
    norm = trace_norm_hermitian(symmetrized(m * signs.asDiagonal() * m.adjoint()));
  } else {
    const Eigen::HouseholderQR<ComplexMatrix> qr(m);
    const ComplexMatrix rr = qr.matrixQR().topRows(r).triangularView<Eigen::Upper>();
    norm = trace_norm_hermitian(symmetrized(rr * signs.asDiagonal() * rr.adjoint()));
  }
  return 0.5 * (1.0 + norm);
}

DiscriminationResult optimize_single(const Channel& ch1, const Channel& ch2, const OptimizerOptions& opts,
                                     double p1, const std::vector<SinglePureProbe>& warm_starts) {
  require_compatible(ch1, ch2);
  require_prior(p1);
  opts.validate();
  const Index dim = ch1.dim_in();
  const Objective objective = [&](std::span<const double> x) {
    return probe_success_probability(ch1, ch2, amplitudes_from_parameters(x), 1, p1);
  };

  std::vector<RealVector> starts;
  for (const auto& w : warm_starts) {
    if (w.dim() != dim) throw DimensionError("warm start dimension does not match channel input");
    starts.push_back(parameters_of(w.amplitudes()));
  }
  for (int i = 0; i < opts.restarts; ++i) {
    starts.push_back(random_parameters(dim, mix_seed(opts.seed, static_cast<std::uint64_t>(i))));
  }
  if (dim == 2) {
    // First random restart is replaced by the best point of a coarse Bloch grid.
    RealVector best;
    double best_value = -1.0;
    for (int i = 0; i <= opts.grid_density; ++i) {
      const double theta = std::numbers::pi * i / opts.grid_density;
      for (int j = 0; j < opts.grid_density; ++j) {
        const double delta = 2.0 * std::numbers::pi * j / opts.grid_density;
        const RealVector x = parameters_of(bloch_qubit(theta, delta).amplitudes());
        const double value = objective(std::span<const double>(x.data(), static_cast<std::size_t>(x.size())));
        if (value > best_value) {
          best_value = value;
          best = x;
        }
      }
    }
    starts[warm_starts.size()] = best;
  }

  const Multistart ms = run_multistart(objective, starts, opts);
  DiscriminationResult res;
  res.probability = ms.best_value;
  res.probe_class = ProbeClass::single;
  res.method = Method::optimizer;
  SinglePureProbe probe = single_from_parameters(
      std::span<const double>(ms.best_x.data(), static_cast<std::size_t>(ms.best_x.size())));
  if (dim == 2) res.probe_params = bloch_angles(probe.amplitudes());
  res.probe = std::move(probe);
  res.optimizer = ms.meta;
  return res;
}

DiscriminationResult optimize_entangled(const Channel& ch1, const Channel& ch2, const OptimizerOptions& opts,
                                        double p1, const std::vector<BipartitePureProbe>& warm_starts) {
  require_compatible(ch1, ch2);
  require_prior(p1);
  opts.validate();
  const Index dim = ch1.dim_in();
  const Objective objective = [&](std::span<const double> x) {
    return probe_success_probability(ch1, ch2, amplitudes_from_parameters(x), dim, p1);
  };

  std::vector<RealVector> starts;
  for (const auto& w : warm_starts) {
    if (w.dim_a() != dim || w.dim_b() != dim) throw DimensionError("warm start dimensions do not match channel");
    starts.push_back(parameters_of(w.amplitudes()));
  }
  for (int i = 0; i < opts.restarts; ++i) {
    starts.push_back(random_parameters(dim * dim, mix_seed(opts.seed, static_cast<std::uint64_t>(i))));
  }

  const Multistart ms = run_multistart(objective, starts, opts);
  DiscriminationResult res;
  res.probability = ms.best_value;
  res.probe_class = ProbeClass::general_entangled;
  res.method = Method::optimizer;
  res.probe = bipartite_from_parameters(
      dim, dim, std::span<const double>(ms.best_x.data(), static_cast<std::size_t>(ms.best_x.size())));
  res.optimizer = ms.meta;
  return res;
}

std::vector<UnitaryPair> pair_ensembles(const MixedUnitaryEnsemble& first, const MixedUnitaryEnsemble& second) {
  first.validate();
  second.validate();
  if (first.unitaries.size() != second.unitaries.size()) throw DimensionError("ensembles differ in size");
  std::vector<UnitaryPair> pairs;
  for (std::size_t k = 0; k < first.unitaries.size(); ++k) {
    if (std::abs(first.weights[k] - second.weights[k]) > 1e-12) {
      throw DomainError("ensembles must share their sampling weights");
    }
    pairs.push_back({first.unitaries[k], second.unitaries[k], first.weights[k]});
  }
  return pairs;
}

double mixed_unitary_single_bound(const std::vector<UnitaryPair>& pairs, const SinglePureProbe& probe) {
  double bound = 0.0;
  for (const auto& [v, w, q] : pairs) {
    if (v.rows() != probe.dim() || w.rows() != probe.dim()) throw DimensionError("pair dimension mismatch");
    const std::complex<double> overlap = probe.amplitudes().dot(v.adjoint() * w * probe.amplitudes());
    bound += q * std::sqrt(std::max(0.0, 1.0 - std::norm(overlap)));
  }
  return 2.0 * bound;
}

double mixed_unitary_maxent_bound(const std::vector<UnitaryPair>& pairs) {
  double bound = 0.0;
  for (const auto& [v, w, q] : pairs) {
    if (v.rows() != w.rows() || v.cols() != w.cols()) throw DimensionError("pair dimension mismatch");
    const double d = static_cast<double>(v.rows());
    const std::complex<double> tr = (v.adjoint() * w).trace();
    bound += q * std::sqrt(std::max(0.0, 1.0 - std::norm(tr) / (d * d)));
  }
  return 2.0 * bound;
}

}  // namespace chandisc
