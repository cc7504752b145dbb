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

// Dense complex linear algebra on small matrices: Kronecker products, partial
// traces, a cyclic Jacobi eigensolver for Hermitian matrices, trace norms and
// the spectral decomposition of unitaries. Everything is templated on the real
// scalar; the rest of the library instantiates it with double.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "chandisc/errors.hpp"

namespace chandisc {

using Eigen::Index;

template <typename Real>
using CMatrix = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Real>
using CVector = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;
template <typename Real>
using RVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

using ComplexMatrix = CMatrix<double>;
using ComplexVector = CVector<double>;
using RealVector = RVector<double>;

// Absolute entrywise tolerance for Hermiticity checks.
inline constexpr double kHermitianTolerance = 1e-10;
inline constexpr double kUnitaryTolerance = 1e-10;

enum class Subsystem { A, B };

template <typename Real>
struct EigenDecomposition {
  RVector<Real> eigenvalues;    // descending
  CMatrix<Real> eigenvectors;   // column k belongs to eigenvalues[k]
};

template <typename Real>
struct EigenPhase {
  Real phase;  // radians in [0, 2pi)
  CVector<Real> vector;
};

/// Kronecker product a (x) b. Row index of the result is ia * b.rows() + ib.
template <typename DerivedA, typename DerivedB>
Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic> tensor(
    const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  static_assert(std::is_same_v<typename DerivedA::Scalar, typename DerivedB::Scalar>,
                "tensor() requires matching scalar types");
  Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic> out(
      a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

/// Reduced operator on the kept factor of a (dim_a*dim_b)-square matrix.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> partial_trace(
    const Eigen::MatrixBase<Derived>& m, Index dim_a, Index dim_b, Subsystem keep) {
  if (dim_a <= 0 || dim_b <= 0 || m.rows() != dim_a * dim_b || m.cols() != dim_a * dim_b) {
    throw DimensionError("partial_trace: matrix is " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + ", expected square of side " +
                         std::to_string(dim_a * dim_b));
  }
  using Scalar = typename Derived::Scalar;
  if (keep == Subsystem::A) {
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out =
        Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(dim_a, dim_a);
    for (Index i = 0; i < dim_a; ++i)
      for (Index j = 0; j < dim_a; ++j)
        for (Index k = 0; k < dim_b; ++k) out(i, j) += m(i * dim_b + k, j * dim_b + k);
    return out;
  }
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(dim_b, dim_b);
  for (Index k = 0; k < dim_a; ++k) out += m.block(k * dim_b, k * dim_b, dim_b, dim_b);
  return out;
}

template <typename Derived>
typename Eigen::NumTraits<typename Derived::Scalar>::Real hermitian_deviation(
    const Eigen::MatrixBase<Derived>& a) {
  if (a.rows() != a.cols()) throw DimensionError("hermitian_deviation: matrix is not square");
  if (a.size() == 0) return 0;
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> symmetrized(
    const Eigen::MatrixBase<Derived>& a) {
  return (a + a.adjoint()) / typename Eigen::NumTraits<typename Derived::Scalar>::Real(2);
}

/// max |U^dagger U - I| entrywise.
template <typename Derived>
typename Eigen::NumTraits<typename Derived::Scalar>::Real unitarity_deviation(
    const Eigen::MatrixBase<Derived>& u) {
  if (u.rows() != u.cols()) throw DimensionError("unitarity_deviation: matrix is not square");
  using Scalar = typename Derived::Scalar;
  const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> gram = u.adjoint() * u;
  return (gram - Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Identity(u.rows(), u.cols()))
      .cwiseAbs()
      .maxCoeff();
}

namespace detail {

// Cyclic complex Jacobi. Diagonalises `a` in place; accumulates the rotations
// into `vectors` when non-null. Each rotation is a phase fix on column q that
// makes a(p,q) real followed by a real Givens rotation in the (p,q) plane.
template <typename Real>
void jacobi_diagonalize(CMatrix<Real>& a, CMatrix<Real>* vectors, int max_sweeps = 64) {
  using std::abs;
  using std::sqrt;
  using Complex = std::complex<Real>;
  const Index n = a.rows();
  if (vectors) vectors->setIdentity(n, n);
  const Real scale = a.norm();
  const Real threshold = Real(4) * std::numeric_limits<Real>::epsilon() * scale;

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    Real off = 0;
    for (Index q = 1; q < n; ++q)
      for (Index p = 0; p < q; ++p) off += std::norm(a(p, q));
    if (sqrt(off) <= threshold) return;

    for (Index p = 0; p < n - 1; ++p) {
      for (Index q = p + 1; q < n; ++q) {
        const Real mag = abs(a(p, q));
        if (mag <= std::numeric_limits<Real>::min()) continue;
        const Complex d = std::conj(a(p, q)) / mag;
        const Real tau = (a(q, q).real() - a(p, p).real()) / (Real(2) * mag);
        const Real t = (tau >= 0 ? Real(1) : Real(-1)) / (abs(tau) + sqrt(Real(1) + tau * tau));
        const Real c = Real(1) / sqrt(Real(1) + t * t);
        const Real s = t * c;

        // columns: A <- A V with V = [[c, s], [-s d, c d]]
        for (Index k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = c * akp - s * d * akq;
          a(k, q) = s * akp + c * d * akq;
        }
        // rows: A <- V^dagger A
        const Complex dc = std::conj(d);
        for (Index k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = c * apk - s * dc * aqk;
          a(q, k) = s * apk + c * dc * aqk;
        }
        a(p, q) = a(q, p) = Complex(0);
        a(p, p) = Complex(a(p, p).real(), 0);
        a(q, q) = Complex(a(q, q).real(), 0);

        if (vectors) {
          auto& v = *vectors;
          for (Index k = 0; k < n; ++k) {
            const Complex vkp = v(k, p);
            const Complex vkq = v(k, q);
            v(k, p) = c * vkp - s * d * vkq;
            v(k, q) = s * vkp + c * d * vkq;
          }
        }
      }
    }
  }
  throw ConvergenceError("hermitian_eig: Jacobi iteration did not converge in " +
                         std::to_string(max_sweeps) + " sweeps");
}

template <typename Derived>
auto checked_hermitian(const Eigen::MatrixBase<Derived>& a) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  if (a.rows() != a.cols()) throw DimensionError("hermitian_eig: matrix is not square");
  const Real deviation = hermitian_deviation(a);
  if (!(deviation <= Real(kHermitianTolerance))) {
    throw NotHermitianError("matrix is not Hermitian (max |A - A^dagger| = " +
                            std::to_string(static_cast<double>(deviation)) + ")");
  }
  CMatrix<Real> work = symmetrized(a.template cast<std::complex<Real>>());
  return work;
}

}  // namespace detail

/// Full spectrum of a Hermitian matrix, eigenvalues in descending order.
template <typename Derived>
auto hermitian_eig(const Eigen::MatrixBase<Derived>& a) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  CMatrix<Real> work = detail::checked_hermitian(a);
  CMatrix<Real> vectors;
  detail::jacobi_diagonalize(work, &vectors);

  const Index n = work.rows();
  std::vector<Index> order(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](Index x, Index y) { return work(x, x).real() > work(y, y).real(); });

  EigenDecomposition<Real> out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  for (Index k = 0; k < n; ++k) {
    const Index src = order[static_cast<std::size_t>(k)];
    out.eigenvalues(k) = work(src, src).real();
    out.eigenvectors.col(k) = vectors.col(src);
  }
  return out;
}

/// Eigenvalues only (descending); skips the rotation accumulation.
template <typename Derived>
auto hermitian_eigenvalues(const Eigen::MatrixBase<Derived>& a) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  CMatrix<Real> work = detail::checked_hermitian(a);
  detail::jacobi_diagonalize<Real>(work, nullptr);
  RVector<Real> values = work.diagonal().real();
  std::sort(values.begin(), values.end(), std::greater<Real>());
  return values;
}

/// Sum of absolute eigenvalues of a Hermitian matrix.
template <typename Derived>
auto trace_norm_hermitian(const Eigen::MatrixBase<Derived>& a) {
  return hermitian_eigenvalues(a).cwiseAbs().sum();
}

/// Spectral decomposition U = sum_k exp(i phase_k) v_k v_k^dagger.
///
/// Diagonalises the Hermitian pencil cos(alpha) Re(U) + sin(alpha) Im(U) for a
/// random alpha; since U is normal its eigenbasis is shared with the pencil and
/// a generic alpha separates distinct eigenvalues. The candidate basis is
/// accepted once V^dagger U V is diagonal to 1e-8, otherwise alpha is redrawn
/// (at most 8 attempts).
template <typename Derived>
auto unitary_eigenphases(const Eigen::MatrixBase<Derived>& u, std::uint64_t seed) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  using Complex = std::complex<Real>;
  if (u.rows() != u.cols()) throw DimensionError("unitary_eigenphases: matrix is not square");
  const CMatrix<Real> uc = u.template cast<Complex>();
  if (!(unitarity_deviation(uc) <= Real(kUnitaryTolerance))) {
    throw DomainError("unitary_eigenphases: matrix is not unitary");
  }
  const Index n = uc.rows();
  const CMatrix<Real> re_part = (uc + uc.adjoint()) / Real(2);
  const CMatrix<Real> im_part = (uc - uc.adjoint()) / Complex(0, 2);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<Real> angle(0, 2 * std::numbers::pi_v<Real>);
  constexpr int kAttempts = 8;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    const Real alpha = angle(rng);
    const CMatrix<Real> pencil = std::cos(alpha) * re_part + std::sin(alpha) * im_part;
    const auto eig = hermitian_eig(symmetrized(pencil));
    const CMatrix<Real> diag = eig.eigenvectors.adjoint() * uc * eig.eigenvectors;
    Real off = 0;
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        if (i != j) off = std::max(off, std::abs(diag(i, j)));
    if (off >= Real(1e-8)) continue;

    std::vector<EigenPhase<Real>> out;
    out.reserve(static_cast<std::size_t>(n));
    for (Index k = 0; k < n; ++k) {
      Real phase = std::arg(diag(k, k));
      if (phase < 0) phase += 2 * std::numbers::pi_v<Real>;
      if (phase >= 2 * std::numbers::pi_v<Real>) phase = 0;
      out.push_back({phase, eig.eigenvectors.col(k)});
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.phase < y.phase; });
    return out;
  }
  throw ConvergenceError("unitary_eigenphases: could not separate eigenvalues after " +
                         std::to_string(kAttempts) + " attempts");
}

/// Haar-random unitary via QR of a complex Ginibre matrix with phase fix.
template <typename Real = double>
CMatrix<Real> random_unitary(Index dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<Real> normal;
  CMatrix<Real> g(dim, dim);
  for (Index j = 0; j < dim; ++j)
    for (Index i = 0; i < dim; ++i) g(i, j) = {normal(rng), normal(rng)};
  Eigen::HouseholderQR<CMatrix<Real>> qr(g);
  CMatrix<Real> q = qr.householderQ();
  const CMatrix<Real> r = qr.matrixQR().template triangularView<Eigen::Upper>();
  for (Index k = 0; k < dim; ++k) {
    const Real mag = std::abs(r(k, k));
    if (mag > 0) q.col(k) *= r(k, k) / mag;
  }
  return q;
}

}  // namespace chandisc
