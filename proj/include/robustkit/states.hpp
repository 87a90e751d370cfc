// Copyright 2026 The robustkit authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ROBUSTKIT_STATES_HPP
#define ROBUSTKIT_STATES_HPP

#include <cstdint>
#include <vector>

#include "robustkit/matrix.hpp"
#include "robustkit/rng.hpp"
#include "robustkit/tolerances.hpp"

namespace robustkit {

/// Largest supported local dimension (N = n^2 = 64); keeps every oracle
/// sub-second.
constexpr int kMaxLocalDim = 8;

/// Normalized pure state on C^n (x) C^n. Amplitude c(i,j) belongs to
/// |i> (x) |j>.
class Ket {
 public:
  Ket(int local_dim, std::vector<cplx> amplitudes, double norm_tol = 1e-10);

  int local_dim() const { return n_; }
  const std::vector<cplx>& amplitudes() const { return amps_; }

 private:
  int n_;
  std::vector<cplx> amps_;
};

/// Hermitian, PSD, unit-trace operator on C^n (x) C^n.
class DensityMatrix {
 public:
  int local_dim() const { return n_; }
  int dim() const { return n_ * n_; }
  const ComplexMatrix& mat() const { return mat_; }

  /// tr(rho^2)
  double purity() const;

  static DensityMatrix from_ket(const Ket& psi);

  /// For operators PSD/unit-trace by construction (convex mixtures,
  /// unitary conjugations). Hermitizes; skips the eigensolve.
  static DensityMatrix unchecked(ComplexMatrix m, int n);

  friend DensityMatrix validate_density(const ComplexMatrix& m, int n,
                                        const Tolerances& tol);

 private:
  DensityMatrix(ComplexMatrix m, int n) : n_(n), mat_(std::move(m)) {}
  int n_;
  ComplexMatrix mat_;
};

/// Full validation: shape, finiteness, Hermiticity (then symmetrization),
/// unit trace, positive semidefiniteness.
DensityMatrix validate_density(const ComplexMatrix& m, int n,
                               const Tolerances& tol = {});

/// psi = sum_i coeffs[i] (basis_a col i) (x) (basis_b col i), coefficients
/// nonnegative descending, sum of squares 1. Coefficients below the clamp
/// are exactly zero; rank counts the nonzero ones.
struct SchmidtDecomposition {
  int n = 0;
  std::vector<double> coeffs;
  ComplexMatrix basis_a;
  ComplexMatrix basis_b;
  int rank = 0;
};

/// SVD of the n x n coefficient matrix C, C(i,j) = amplitude at c(i,j).
SchmidtDecomposition schmidt(const Ket& psi, const Tolerances& tol = {});

/// A canonical decomposition (natural bases) with the given coefficients.
SchmidtDecomposition canonical_schmidt(std::vector<double> coeffs,
                                       const Tolerances& tol = {});

std::vector<cplx> reconstruct_ket(const SchmidtDecomposition& sd);

/// True when the decomposition reconstructs the natural-basis state
/// sum_i a_i |i>|i> of its own coefficients.
bool is_canonical(const SchmidtDecomposition& sd, double tol = 1e-9);

/// The local-unitary-equivalent state sum_i a_i |i>|i> (real nonnegative
/// amplitudes, so the largest-coefficient amplitude is real nonnegative).
Ket canonicalize(const Ket& psi, const Tolerances& tol = {});

/// Haar-distributed pure state (normalized complex-Gaussian vector).
Ket random_pure(int n, std::uint64_t seed);

/// Ginibre-ensemble density matrix: G G^dagger / tr(G G^dagger).
DensityMatrix random_density(int n, std::uint64_t seed);

/// Haar-distributed n x n unitary (QR of a Ginibre matrix with positive
/// diagonal phases).
ComplexMatrix random_unitary(int n, Rng& rng);

}  // namespace robustkit

#endif  // ROBUSTKIT_STATES_HPP
