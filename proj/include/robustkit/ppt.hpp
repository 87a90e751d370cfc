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

#ifndef ROBUSTKIT_PPT_HPP
#define ROBUSTKIT_PPT_HPP

#include <optional>
#include <utility>
#include <vector>

#include "robustkit/eigensolver.hpp"
#include "robustkit/states.hpp"

namespace robustkit {

/// Transpose on the second tensor factor:
/// out[c(r,u), c(t,s)] = M[c(r,s), c(t,u)]. Trace- and
/// Hermiticity-preserving; an involution.
ComplexMatrix partial_transpose(const ComplexMatrix& m, int n);

/// Peres criterion: min eigenvalue of rho^pt >= -tol. Exact separability
/// oracle for n = 2 only; a necessary condition for n >= 3, so callers must
/// label verdicts "PPT", not "separable".
bool is_ppt(const DensityMatrix& rho, double tol = 1e-9);

double pt_min_eigenvalue(const DensityMatrix& rho);

/// (|r>|s> - |s>|r>)/sqrt(2): the closed-form negative eigenvectors of the
/// partial transpose of a canonical pure state. Exactly two nonzero entries,
/// +1/sqrt(2) at c(r,s) and -1/sqrt(2) at c(s,r).
struct AntisymVector {
  int r;
  int s;
  std::vector<cplx> vec;
};

AntisymVector antisym_vector(int r, int s, int n);

struct PTNegative {
  double value;
  /// Present only when the closed form applies (canonical pure input).
  std::optional<std::pair<int, int>> pair;
};

struct PTSpectrum {
  EigenSystem full;
  std::vector<PTNegative> negatives;  // ascending, values < -tol
};

PTSpectrum pt_spectrum(const DensityMatrix& rho, double neg_tol = 1e-9);

/// Closed-form negative eigenpairs { (-a_r a_s, e_f(r,s)) : r < s } of the
/// partial transpose of the canonical state with coefficients a. Pairs whose
/// product is at or below pair_skip are dropped (degenerate Schmidt rank).
/// Rejects non-canonical decompositions.
std::vector<std::pair<double, AntisymVector>> pure_pt_eigenpairs(
    const SchmidtDecomposition& sd, double pair_skip = 1e-9);

/// Sum of |negative eigenvalues| of rho^pt.
double negativity(const DensityMatrix& rho);

}  // namespace robustkit

#endif  // ROBUSTKIT_PPT_HPP
