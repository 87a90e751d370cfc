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

#include "robustkit/states.hpp"

#include <cmath>

#include "robustkit/eigensolver.hpp"
#include "robustkit/kernels.hpp"
#include "robustkit/svd.hpp"

namespace robustkit {

namespace {

void check_local_dim(int n) {
  if (n < 1 || n > kMaxLocalDim)
    throw validation_error("local dimension out of range [1, 8]");
}

double norm2(const std::vector<cplx>& v) {
  const cplx s = kernels::active().cdotc(v.data(), v.data(), v.size());
  return std::sqrt(s.real());
}

}  // namespace

Ket::Ket(int local_dim, std::vector<cplx> amplitudes, double norm_tol)
    : n_(local_dim), amps_(std::move(amplitudes)) {
  check_local_dim(n_);
  if (amps_.size() != static_cast<std::size_t>(n_) * n_)
    throw validation_error("Ket: amplitude vector must have length n^2");
  for (const cplx& z : amps_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw validation_error("Ket: non-finite amplitude");
  if (std::abs(norm2(amps_) - 1.0) > norm_tol)
    throw validation_error("Ket: state not normalized");
}

double DensityMatrix::purity() const {
  // tr(rho^2) = sum_ij |rho_ij|^2 for Hermitian rho.
  const cplx s = kernels::active().cdotc(mat_.data(), mat_.data(), mat_.size());
  return s.real();
}

DensityMatrix DensityMatrix::from_ket(const Ket& psi) {
  const int dim = psi.local_dim() * psi.local_dim();
  ComplexMatrix m(dim, dim);
  const auto& a = psi.amplitudes();
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) m(r, c) = a[r] * std::conj(a[c]);
  return DensityMatrix(hermitize(m), psi.local_dim());
}

DensityMatrix DensityMatrix::unchecked(ComplexMatrix m, int n) {
  check_local_dim(n);
  if (m.rows() != n * n || m.cols() != n * n)
    throw validation_error("DensityMatrix: operator must be n^2 x n^2");
  return DensityMatrix(hermitize(m), n);
}

DensityMatrix validate_density(const ComplexMatrix& m, int n,
                               const Tolerances& tol) {
  check_local_dim(n);
  const int dim = n * n;
  if (m.rows() != dim || m.cols() != dim)
    throw validation_error("validate_density: operator must be n^2 x n^2");
  if (!m.all_finite())
    throw validation_error("validate_density: non-finite entries");
  if (m.hermiticity_error() > tol.hermitian)
    throw validation_error("validate_density: not Hermitian within tolerance");
  ComplexMatrix h = hermitize(m);
  const cplx tr = h.trace();
  if (std::abs(tr - cplx(1.0, 0.0)) > tol.trace)
    throw validation_error("validate_density: trace differs from 1");
  if (min_eigenvalue(h, tol.hermitian) < -tol.psd)
    throw validation_error("validate_density: negative eigenvalue");
  return DensityMatrix(std::move(h), n);
}

SchmidtDecomposition schmidt(const Ket& psi, const Tolerances& tol) {
  const int n = psi.local_dim();
  ComplexMatrix coeff(n, n);
  const auto& a = psi.amplitudes();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) coeff(i, j) = a[static_cast<std::size_t>(i) * n + j];

  Svd s = svd_jacobi(coeff);

  SchmidtDecomposition sd;
  sd.n = n;
  sd.coeffs = std::move(s.singular_values);
  sd.basis_a = std::move(s.u);
  sd.basis_b = s.v.conj();
  sd.rank = 0;
  for (double& c : sd.coeffs) {
    if (c < tol.schmidt_clamp)
      c = 0.0;
    else
      ++sd.rank;
  }
  return sd;
}

SchmidtDecomposition canonical_schmidt(std::vector<double> coeffs,
                                       const Tolerances& tol) {
  const int n = static_cast<int>(coeffs.size());
  check_local_dim(n);
  double sum_sq = 0.0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] < 0.0)
      throw validation_error("canonical_schmidt: negative coefficient");
    if (i > 0 && coeffs[i] > coeffs[i - 1] + 1e-12)
      throw validation_error("canonical_schmidt: coefficients not descending");
    sum_sq += coeffs[i] * coeffs[i];
  }
  if (std::abs(sum_sq - 1.0) > 1e-9)
    throw validation_error("canonical_schmidt: coefficients not normalized");
  SchmidtDecomposition sd;
  sd.n = n;
  sd.rank = 0;
  for (double& c : coeffs) {
    if (c < tol.schmidt_clamp)
      c = 0.0;
    else
      ++sd.rank;
  }
  sd.coeffs = std::move(coeffs);
  sd.basis_a = ComplexMatrix::identity(n);
  sd.basis_b = ComplexMatrix::identity(n);
  return sd;
}

std::vector<cplx> reconstruct_ket(const SchmidtDecomposition& sd) {
  const int n = sd.n;
  std::vector<cplx> psi(static_cast<std::size_t>(n) * n, cplx(0.0, 0.0));
  for (int k = 0; k < n; ++k) {
    if (sd.coeffs[k] == 0.0) continue;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        psi[static_cast<std::size_t>(i) * n + j] +=
            sd.coeffs[k] * sd.basis_a(i, k) * sd.basis_b(j, k);
  }
  return psi;
}

bool is_canonical(const SchmidtDecomposition& sd, double tol) {
  const std::vector<cplx> rec = reconstruct_ket(sd);
  double err = 0.0;
  const int n = sd.n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const cplx expected = (i == j) ? cplx(sd.coeffs[i], 0.0) : cplx(0.0, 0.0);
      err = std::max(err,
                     std::abs(rec[static_cast<std::size_t>(i) * n + j] - expected));
    }
  return err <= tol;
}

Ket canonicalize(const Ket& psi, const Tolerances& tol) {
  SchmidtDecomposition sd = schmidt(psi, tol);
  const int n = sd.n;
  std::vector<cplx> amps(static_cast<std::size_t>(n) * n, cplx(0.0, 0.0));
  double sum_sq = 0.0;
  for (int i = 0; i < n; ++i) sum_sq += sd.coeffs[i] * sd.coeffs[i];
  const double scale = 1.0 / std::sqrt(sum_sq);
  for (int i = 0; i < n; ++i)
    amps[static_cast<std::size_t>(i) * n + i] = sd.coeffs[i] * scale;
  return Ket(n, std::move(amps), tol.ket_norm);
}

Ket random_pure(int n, std::uint64_t seed) {
  check_local_dim(n);
  Rng rng(seed);
  std::vector<cplx> amps(static_cast<std::size_t>(n) * n);
  for (cplx& z : amps) z = rng.complex_normal();
  const double nrm = norm2(amps);
  for (cplx& z : amps) z /= nrm;
  return Ket(n, std::move(amps));
}

DensityMatrix random_density(int n, std::uint64_t seed) {
  check_local_dim(n);
  Rng rng(seed);
  const int dim = n * n;
  ComplexMatrix g(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) g(r, c) = rng.complex_normal();
  ComplexMatrix rho = g * g.dagger();
  rho *= 1.0 / rho.trace().real();
  return DensityMatrix::unchecked(std::move(rho), n);
}

ComplexMatrix random_unitary(int n, Rng& rng) {
  ComplexMatrix q(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) q(r, c) = rng.complex_normal();
  // Modified Gram-Schmidt; the positive-real diagonal of R makes Q Haar.
  for (int c = 0; c < n; ++c) {
    for (int prev = 0; prev < c; ++prev) {
      cplx overlap = 0.0;
      for (int i = 0; i < n; ++i) overlap += std::conj(q(i, prev)) * q(i, c);
      for (int i = 0; i < n; ++i) q(i, c) -= overlap * q(i, prev);
    }
    double nn = 0.0;
    for (int i = 0; i < n; ++i) nn += std::norm(q(i, c));
    nn = std::sqrt(nn);
    if (nn == 0.0) throw numeric_error("random_unitary: degenerate draw");
    for (int i = 0; i < n; ++i) q(i, c) /= nn;
  }
  return q;
}

}  // namespace robustkit
