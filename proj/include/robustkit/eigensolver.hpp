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

#ifndef ROBUSTKIT_EIGENSOLVER_HPP
#define ROBUSTKIT_EIGENSOLVER_HPP

#include <vector>

#include "robustkit/matrix.hpp"

namespace robustkit {

/// Full orthonormal eigensystem of a Hermitian matrix. Eigenvalues ascend;
/// eigenvectors(.,i) pairs with eigenvalues[i].
struct EigenSystem {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;

  std::vector<cplx> eigenvector(int i) const {
    std::vector<cplx> v(eigenvectors.rows());
    for (int r = 0; r < eigenvectors.rows(); ++r) v[r] = eigenvectors(r, i);
    return v;
  }
};

/// Cyclic complex Jacobi eigensolver. Rejects inputs whose hermiticity error
/// exceeds hermit_tol; symmetrizes (M+M^dagger)/2 before iterating.
EigenSystem hermitian_eigen(const ComplexMatrix& m, double hermit_tol = 1e-10);

/// Eigenvalues only (ascending); skips eigenvector accumulation.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m,
                                          double hermit_tol = 1e-10);

double min_eigenvalue(const ComplexMatrix& m, double hermit_tol = 1e-10);

/// True iff the smallest eigenvalue is >= -tol.
bool is_psd(const ComplexMatrix& m, double tol);

}  // namespace robustkit

#endif  // ROBUSTKIT_EIGENSOLVER_HPP
