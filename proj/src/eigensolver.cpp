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

#include "robustkit/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "robustkit/kernels.hpp"

namespace robustkit {

namespace {

constexpr int kMaxSweeps = 64;

double offdiag_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (int p = 0; p < a.rows(); ++p)
    for (int q = p + 1; q < a.cols(); ++q) s += std::norm(a(p, q));
  return std::sqrt(2.0 * s);
}

// One cyclic Jacobi pass over all (p, q). A stays Hermitian; rotations are
// applied to rows via the rot2 kernel, columns restored from conjugate
// symmetry. W accumulates V^dagger (rows transform like A's), so the final
// eigenvector matrix is W^dagger.
void jacobi_sweep(ComplexMatrix& a, ComplexMatrix* w, double skip_tol) {
  const int n = a.rows();
  const auto& k = kernels::active();
  for (int p = 0; p < n; ++p) {
    for (int q = p + 1; q < n; ++q) {
      const cplx apq = a(p, q);
      const double r = std::abs(apq);
      if (r <= skip_tol) continue;

      const double app = a(p, p).real();
      const double aqq = a(q, q).real();
      const cplx phase = apq / r;
      const double tau = (aqq - app) / (2.0 * r);
      const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                       (std::abs(tau) + std::sqrt(1.0 + tau * tau));
      const double cs = 1.0 / std::sqrt(1.0 + t * t);
      const double sn = t * cs;

      // Plane rotation J: J(p,p)=phase*cs, J(p,q)=phase*sn, J(q,p)=-sn,
      // J(q,q)=cs. Update A <- J^dagger A J.
      const cplx alpha = phase * cs;
      const cplx beta = phase * sn;

      // Rows: B = J^dagger A.
      k.rot2(std::conj(alpha), cplx(-sn, 0.0), std::conj(beta),
             cplx(cs, 0.0), a.row(p), a.row(q), static_cast<std::size_t>(n));

      // 2x2 block of B*J.
      const cplx bpp = a(p, p), bpq = a(p, q);
      const cplx bqp = a(q, p), bqq = a(q, q);
      a(p, p) = cplx((bpp * alpha - bpq * sn).real(), 0.0);
      a(q, q) = cplx((bqp * beta + bqq * cs).real(), 0.0);
      a(p, q) = 0.0;
      a(q, p) = 0.0;

      // Columns p, q from Hermiticity.
      for (int i = 0; i < n; ++i) {
        if (i == p || i == q) continue;
        a(i, p) = std::conj(a(p, i));
        a(i, q) = std::conj(a(q, i));
      }

      if (w)
        k.rot2(std::conj(alpha), cplx(-sn, 0.0), std::conj(beta),
               cplx(cs, 0.0), w->row(p), w->row(q),
               static_cast<std::size_t>(n));
    }
  }
}

// Diagonalizes in place; returns W = V^dagger when want_vectors.
ComplexMatrix jacobi_diagonalize(ComplexMatrix& a, bool want_vectors) {
  const int n = a.rows();
  ComplexMatrix w = want_vectors ? ComplexMatrix::identity(n)
                                 : ComplexMatrix(1, 1);
  const double fro = a.frobenius_norm();
  if (fro == 0.0) return w;
  const double stop = 1e-14 * fro;
  const double skip = 1e-18 * fro;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (offdiag_norm(a) <= stop) return w;
    jacobi_sweep(a, want_vectors ? &w : nullptr, skip);
  }
  if (offdiag_norm(a) <= stop) return w;
  throw numeric_error("hermitian_eigen: Jacobi iteration did not converge");
}

ComplexMatrix checked_hermitian_input(const ComplexMatrix& m,
                                      double hermit_tol) {
  if (!m.square()) throw validation_error("hermitian_eigen: not square");
  if (!m.all_finite())
    throw validation_error("hermitian_eigen: non-finite entries");
  if (m.hermiticity_error() > hermit_tol)
    throw validation_error("hermitian_eigen: input not Hermitian within tolerance");
  return hermitize(m);
}

}  // namespace

EigenSystem hermitian_eigen(const ComplexMatrix& m, double hermit_tol) {
  ComplexMatrix a = checked_hermitian_input(m, hermit_tol);
  const int n = a.rows();
  ComplexMatrix w = jacobi_diagonalize(a, true);

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
    return a(i, i).real() < a(j, j).real();
  });

  EigenSystem out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n, n);
  for (int i = 0; i < n; ++i) {
    out.eigenvalues[i] = a(order[i], order[i]).real();
    // Eigenvector i is column order[i] of V = W^dagger.
    for (int r = 0; r < n; ++r)
      out.eigenvectors(r, i) = std::conj(w(order[i], r));
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m,
                                          double hermit_tol) {
  ComplexMatrix a = checked_hermitian_input(m, hermit_tol);
  jacobi_diagonalize(a, false);
  std::vector<double> vals(a.rows());
  for (int i = 0; i < a.rows(); ++i) vals[i] = a(i, i).real();
  std::sort(vals.begin(), vals.end());
  return vals;
}

double min_eigenvalue(const ComplexMatrix& m, double hermit_tol) {
  return hermitian_eigenvalues(m, hermit_tol).front();
}

bool is_psd(const ComplexMatrix& m, double tol) {
  return min_eigenvalue(m) >= -tol;
}

}  // namespace robustkit
