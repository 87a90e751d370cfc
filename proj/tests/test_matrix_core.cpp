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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "robustkit/eigensolver.hpp"
#include "robustkit/indexing.hpp"
#include "robustkit/matrix.hpp"
#include "robustkit/svd.hpp"
#include "test_support.hpp"

using namespace robustkit;
using namespace robustkit::testing;

TEST_CASE("tensor of identities is the identity") {
  const ComplexMatrix i2 = ComplexMatrix::identity(2);
  const ComplexMatrix i4 = tensor(i2, i2);
  CHECK(max_entry_diff(i4, ComplexMatrix::identity(4)) == 0.0);
}

TEST_CASE("tensor of basis kets follows the c-index convention") {
  // |1> (x) |2> at n = 2 is the second basis vector: c(1,2) = 2.
  ComplexMatrix ket1(2, 1), ket2(2, 1);
  ket1(0, 0) = 1.0;
  ket2(1, 0) = 1.0;
  const ComplexMatrix prod = tensor(ket1, ket2);
  CHECK(prod.rows() == 4);
  CHECK(std::abs(prod(0, 0)) == 0.0);
  CHECK(std::abs(prod(1, 0) - cplx(1.0, 0.0)) == 0.0);
  CHECK(std::abs(prod(2, 0)) == 0.0);
  CHECK(std::abs(prod(3, 0)) == 0.0);
}

TEST_CASE("tensor hand-expanded 2x2 example") {
  ComplexMatrix a(2, 2), x(2, 2);
  a(0, 0) = 1.0; a(0, 1) = 2.0; a(1, 0) = 3.0; a(1, 1) = 4.0;
  x(0, 1) = 1.0; x(1, 0) = 1.0;
  const ComplexMatrix t = tensor(a, x);
  const double expected[4][4] = {{0, 1, 0, 2},
                                 {1, 0, 2, 0},
                                 {0, 3, 0, 4},
                                 {3, 0, 4, 0}};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      CHECK(std::abs(t(r, c) - cplx(expected[r][c], 0.0)) == 0.0);
}

TEST_CASE("tensor is associative and bilinear on random matrices") {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix a = random_matrix(rng, 2, 2);
    const ComplexMatrix b = random_matrix(rng, 2, 2);
    const ComplexMatrix c = random_matrix(rng, 2, 2);
    CHECK(max_entry_diff(tensor(tensor(a, b), c), tensor(a, tensor(b, c))) <
          1e-12);
    const cplx s = rng.complex_normal();
    CHECK(max_entry_diff(tensor(linear_combination(s, a, 1.0, b), c),
                         linear_combination(s, tensor(a, c), 1.0,
                                            tensor(b, c))) < 1e-12);
  }
}

TEST_CASE("tensor rejects oversized results") {
  const ComplexMatrix big = ComplexMatrix::identity(64);
  CHECK_THROWS_AS(tensor(big, ComplexMatrix::identity(2)), validation_error);
}

TEST_CASE("index_c matches the closed form") {
  CHECK(index_c(1, 2, 2) == 2);
  CHECK(index_c(1, 1, 2) == 1);
  CHECK(index_c(1, 1, 5) == 1);
  CHECK(index_c(3, 2, 3) == 8);
  CHECK_THROWS_AS(index_c(0, 1, 2), validation_error);
  CHECK_THROWS_AS(index_c(1, 3, 2), validation_error);
}

TEST_CASE("index_f examples and rejection of i >= j") {
  CHECK(index_f(1, 2, 2) == 1);
  CHECK(index_f(2, 3, 3) == 3);
  CHECK(index_f(1, 4, 4) == 3);
  CHECK_THROWS_AS(index_f(2, 2, 3), validation_error);
  CHECK_THROWS_AS(index_f(3, 2, 3), validation_error);
}

TEST_CASE("index_f is a bijection onto 1..n(n-1)/2 for n <= 8") {
  for (int n = 2; n <= 8; ++n) {
    std::set<int> seen;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        const int f = index_f(i, j, n);
        CHECK(f >= 1);
        CHECK(f <= pair_count(n));
        CHECK(seen.insert(f).second);
      }
    CHECK(static_cast<int>(seen.size()) == pair_count(n));
  }
}

TEST_CASE("antisym_pairs ordering matches index_f") {
  for (int n = 2; n <= 8; ++n) {
    const auto pairs = antisym_pairs(n);
    for (std::size_t k = 0; k < pairs.size(); ++k)
      CHECK(index_f(pairs[k].first, pairs[k].second, n) ==
            static_cast<int>(k) + 1);
  }
}

TEST_CASE("hermitian_eigen on the identity") {
  const EigenSystem eig = hermitian_eigen(ComplexMatrix::identity(4));
  for (double v : eig.eigenvalues) CHECK(std::abs(v - 1.0) < 1e-14);
}

TEST_CASE("hermitian_eigen on diag(3, -1)") {
  ComplexMatrix m(2, 2);
  m(0, 0) = 3.0;
  m(1, 1) = -1.0;
  const EigenSystem eig = hermitian_eigen(m);
  CHECK(std::abs(eig.eigenvalues[0] + 1.0) < 1e-14);
  CHECK(std::abs(eig.eigenvalues[1] - 3.0) < 1e-14);
  CHECK(std::abs(std::abs(eig.eigenvectors(1, 0)) - 1.0) < 1e-14);
  CHECK(std::abs(std::abs(eig.eigenvectors(0, 1)) - 1.0) < 1e-14);
}

TEST_CASE("hermitian_eigen on the Bell projector") {
  const EigenSystem eig = hermitian_eigen(bell_density_mat());
  CHECK(std::abs(eig.eigenvalues[0]) < 1e-12);
  CHECK(std::abs(eig.eigenvalues[1]) < 1e-12);
  CHECK(std::abs(eig.eigenvalues[2]) < 1e-12);
  CHECK(std::abs(eig.eigenvalues[3] - 1.0) < 1e-12);
}

TEST_CASE("hermitian_eigen rejects non-Hermitian input") {
  ComplexMatrix m(2, 2);
  m(0, 1) = 1.0;  // m(1,0) stays 0
  CHECK_THROWS_AS(hermitian_eigen(m), validation_error);
}

TEST_CASE("eigen reconstruction and orthonormality on random Hermitian") {
  Rng rng(5);
  for (int dim : {2, 3, 8, 16, 64}) {
    const ComplexMatrix m = random_hermitian(rng, dim);
    const EigenSystem eig = hermitian_eigen(m);

    // Reconstruction sum lambda_i v_i v_i^dagger = M.
    ComplexMatrix rec(dim, dim);
    for (int i = 0; i < dim; ++i) {
      const auto v = eig.eigenvector(i);
      for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c)
          rec(r, c) += eig.eigenvalues[i] * v[r] * std::conj(v[c]);
    }
    const double scale =
        std::max(std::abs(eig.eigenvalues.front()),
                 std::abs(eig.eigenvalues.back()));
    CHECK(max_entry_diff(rec, m) < 1e-9 * std::max(1.0, scale));

    // Pairwise orthonormality.
    for (int i = 0; i < dim; ++i) {
      const auto vi = eig.eigenvector(i);
      for (int j = i; j < dim; ++j) {
        const auto vj = eig.eigenvector(j);
        cplx dot = 0.0;
        for (int r = 0; r < dim; ++r) dot += std::conj(vi[r]) * vj[r];
        CHECK(std::abs(dot - (i == j ? 1.0 : 0.0)) < 1e-10);
      }
    }

    // Residual ||M v - lambda v|| relative to the spectral scale.
    for (int i = 0; i < dim; ++i) {
      const auto v = eig.eigenvector(i);
      const auto mv = matvec(m, v);
      double resid = 0.0;
      for (int r = 0; r < dim; ++r)
        resid += std::norm(mv[r] - eig.eigenvalues[i] * v[r]);
      CHECK(std::sqrt(resid) < 1e-9 * std::max(1.0, scale));
    }
  }
}

TEST_CASE("hermitian_eigen handles zero, scalar, and rescaled inputs") {
  const EigenSystem zero = hermitian_eigen(ComplexMatrix(3, 3));
  for (double v : zero.eigenvalues) CHECK(v == 0.0);

  ComplexMatrix one(1, 1);
  one(0, 0) = 5.0;
  CHECK(hermitian_eigen(one).eigenvalues[0] == 5.0);

  // Thresholds are relative to the matrix scale.
  Rng rng(21);
  const ComplexMatrix h = random_hermitian(rng, 8);
  const ComplexMatrix big = cplx(1e8, 0.0) * h;
  const EigenSystem eig_h = hermitian_eigen(h);
  const EigenSystem eig_big = hermitian_eigen(big);
  for (int i = 0; i < 8; ++i)
    CHECK(std::abs(eig_big.eigenvalues[i] - 1e8 * eig_h.eigenvalues[i]) <
          1e-5);
}

TEST_CASE("svd_jacobi reconstructs and completes null spaces") {
  Rng rng(23);
  for (int n : {2, 3, 5, 8}) {
    const ComplexMatrix a = random_matrix(rng, n, n);
    const Svd s = svd_jacobi(a);
    // U diag(sigma) V^dagger = A.
    ComplexMatrix rec(n, n);
    for (int k = 0; k < n; ++k)
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
          rec(r, c) += s.singular_values[k] * s.u(r, k) *
                       std::conj(s.v(c, k));
    CHECK(max_entry_diff(rec, a) < 1e-12 * std::max(1.0, a.max_abs()));
    for (std::size_t i = 0; i + 1 < s.singular_values.size(); ++i)
      CHECK(s.singular_values[i] >= s.singular_values[i + 1]);
  }

  // Zero matrix: all singular values zero, bases completed to unitaries.
  const Svd z = svd_jacobi(ComplexMatrix(3, 3));
  for (double s : z.singular_values) CHECK(s == 0.0);
  CHECK(max_entry_diff(z.u * z.u.dagger(), ComplexMatrix::identity(3)) <
        1e-12);

  // Rank-1 matrix: one singular value, orthonormal completion for the rest.
  ComplexMatrix rank1(3, 3);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) rank1(r, c) = cplx(1.0, 0.0);
  const Svd r1 = svd_jacobi(rank1);
  CHECK(std::abs(r1.singular_values[0] - 3.0) < 1e-12);
  CHECK(r1.singular_values[1] == 0.0);
  CHECK(max_entry_diff(r1.u * r1.u.dagger(), ComplexMatrix::identity(3)) <
        1e-12);
}

TEST_CASE("is_psd verdicts") {
  CHECK(is_psd(ComplexMatrix::identity(2), 0.0));
  ComplexMatrix m(2, 2);
  m(0, 0) = 1.0;
  m(1, 1) = -0.5;
  CHECK_FALSE(is_psd(m, 1e-9));

  // PT of the Bell projector in closed form has eigenvalues {0,0,0,1}:
  // G2 = (|11><11| + |22><22| - |11><22| - |22><11|)/2 is PSD.
  ComplexMatrix g2(4, 4);
  g2(0, 0) = g2(3, 3) = 0.5;
  g2(0, 3) = g2(3, 0) = -0.5;
  CHECK(is_psd(g2, 0.0));
}
