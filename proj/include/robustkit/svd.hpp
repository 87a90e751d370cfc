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

#ifndef ROBUSTKIT_SVD_HPP
#define ROBUSTKIT_SVD_HPP

#include <vector>

#include "robustkit/matrix.hpp"

namespace robustkit {

/// A = U diag(sigma) V^dagger with U, V unitary and sigma descending.
struct Svd {
  ComplexMatrix u;
  std::vector<double> singular_values;
  ComplexMatrix v;
};

/// One-sided Jacobi SVD for small square matrices (coefficient matrices of
/// bipartite states, n <= 8). Column phases are fixed so the largest-modulus
/// entry of each U column is real positive; ties between equal singular
/// values are broken by lexicographic comparison of U columns.
Svd svd_jacobi(const ComplexMatrix& a);

}  // namespace robustkit

#endif  // ROBUSTKIT_SVD_HPP
