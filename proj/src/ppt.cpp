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

#include "robustkit/ppt.hpp"

#include <cmath>

#include "robustkit/indexing.hpp"

namespace robustkit {

ComplexMatrix partial_transpose(const ComplexMatrix& m, int n) {
  const int dim = n * n;
  if (m.rows() != dim || m.cols() != dim)
    throw validation_error("partial_transpose: operator must be n^2 x n^2");
  ComplexMatrix out(dim, dim);
  // Block (r, t) of size n x n gets transposed in place.
  for (int r = 0; r < n; ++r)
    for (int t = 0; t < n; ++t)
      for (int s = 0; s < n; ++s)
        for (int u = 0; u < n; ++u)
          out(r * n + u, t * n + s) = m(r * n + s, t * n + u);
  return out;
}

bool is_ppt(const DensityMatrix& rho, double tol) {
  return pt_min_eigenvalue(rho) >= -tol;
}

double pt_min_eigenvalue(const DensityMatrix& rho) {
  return min_eigenvalue(partial_transpose(rho.mat(), rho.local_dim()));
}

AntisymVector antisym_vector(int r, int s, int n) {
  if (r < 1 || s <= r || s > n)
    throw validation_error("antisym_vector: requires 1 <= r < s <= n");
  AntisymVector v{r, s, std::vector<cplx>(static_cast<std::size_t>(n) * n,
                                          cplx(0.0, 0.0))};
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  v.vec[index_c(r, s, n) - 1] = inv_sqrt2;
  v.vec[index_c(s, r, n) - 1] = -inv_sqrt2;
  return v;
}

PTSpectrum pt_spectrum(const DensityMatrix& rho, double neg_tol) {
  PTSpectrum out;
  out.full = hermitian_eigen(partial_transpose(rho.mat(), rho.local_dim()));
  for (double v : out.full.eigenvalues) {
    if (v < -neg_tol) out.negatives.push_back({v, std::nullopt});
  }
  return out;
}

std::vector<std::pair<double, AntisymVector>> pure_pt_eigenpairs(
    const SchmidtDecomposition& sd, double pair_skip) {
  if (!is_canonical(sd))
    throw validation_error(
        "pure_pt_eigenpairs: decomposition is not in canonical form");
  std::vector<std::pair<double, AntisymVector>> out;
  const int n = sd.n;
  for (const auto& [r, s] : antisym_pairs(n)) {
    const double product = sd.coeffs[r - 1] * sd.coeffs[s - 1];
    if (product <= pair_skip) continue;
    out.emplace_back(-product, antisym_vector(r, s, n));
  }
  return out;
}

double negativity(const DensityMatrix& rho) {
  const std::vector<double> vals =
      hermitian_eigenvalues(partial_transpose(rho.mat(), rho.local_dim()));
  double sum = 0.0;
  for (double v : vals)
    if (v < 0.0) sum -= v;
  return sum;
}

}  // namespace robustkit
