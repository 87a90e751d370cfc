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

#include <algorithm>

#include "robustkit/indexing.hpp"
#include "robustkit/ppt.hpp"
#include "robustkit/robustness.hpp"
#include "test_support.hpp"

using namespace robustkit;
using namespace robustkit::testing;

TEST_CASE("partial transpose of elementary tensors transposes the second factor") {
  Rng rng(1);
  const ComplexMatrix a = random_matrix(rng, 2, 2);
  const ComplexMatrix b = random_matrix(rng, 2, 2);
  const ComplexMatrix direct = partial_transpose(tensor(a, b), 2);
  ComplexMatrix bt(2, 2);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) bt(r, c) = b(c, r);
  CHECK(max_entry_diff(direct, tensor(a, bt)) == 0.0);
}

TEST_CASE("partial transpose of the Bell projector") {
  const ComplexMatrix pt = partial_transpose(bell_density_mat(), 2);
  ComplexMatrix expected(4, 4);
  expected(0, 0) = expected(3, 3) = 0.5;
  expected(1, 2) = expected(2, 1) = 0.5;
  CHECK(max_entry_diff(pt, expected) == 0.0);
}

TEST_CASE("partial transpose is a bit-exact involution") {
  Rng rng(2);
  for (int n : {2, 3, 4}) {
    const ComplexMatrix m = random_matrix(rng, n * n, n * n);
    CHECK(max_entry_diff(partial_transpose(partial_transpose(m, n), n), m) ==
          0.0);
  }
}

TEST_CASE("partial transpose preserves trace and Hermiticity") {
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix h = random_hermitian(rng, 9);
    const ComplexMatrix pt = partial_transpose(h, 3);
    CHECK(std::abs(pt.trace() - h.trace()) < 1e-12);
    CHECK(pt.hermiticity_error() < 1e-12);
  }
}

TEST_CASE("is_ppt verdicts") {
  CHECK(is_ppt(validate_density(maximally_mixed_mat(4), 2)));
  CHECK_FALSE(is_ppt(validate_density(bell_density_mat(), 2)));

  ComplexMatrix diag(4, 4);
  diag(0, 0) = 0.5;
  diag(3, 3) = 0.5;
  CHECK(is_ppt(validate_density(diag, 2)));
}

TEST_CASE("PT spectrum of the Bell projector is {-1/2, 1/2, 1/2, 1/2}") {
  const PTSpectrum spec = pt_spectrum(validate_density(bell_density_mat(), 2));
  CHECK(spec.negatives.size() == 1);
  CHECK(std::abs(spec.negatives[0].value + 0.5) < 1e-12);
  for (int i = 1; i < 4; ++i)
    CHECK(std::abs(spec.full.eigenvalues[i] - 0.5) < 1e-12);
}

TEST_CASE("antisym vectors have the two-entry form") {
  const AntisymVector v = antisym_vector(1, 2, 2);
  CHECK(std::abs(v.vec[index_c(1, 2, 2) - 1] - cplx(1.0 / std::sqrt(2.0), 0)) <
        1e-15);
  CHECK(std::abs(v.vec[index_c(2, 1, 2) - 1] + cplx(1.0 / std::sqrt(2.0), 0)) <
        1e-15);
  int nonzero = 0;
  for (const cplx& z : v.vec)
    if (std::abs(z) > 0.0) ++nonzero;
  CHECK(nonzero == 2);
  CHECK_THROWS_AS(antisym_vector(2, 2, 3), validation_error);
}

TEST_CASE("pure_pt_eigenpairs closed forms") {
  const auto bell_pairs =
      pure_pt_eigenpairs(canonical_schmidt({1.0 / std::sqrt(2.0),
                                            1.0 / std::sqrt(2.0)}));
  REQUIRE(bell_pairs.size() == 1);
  CHECK(std::abs(bell_pairs[0].first + 0.5) < 1e-12);
  CHECK(bell_pairs[0].second.r == 1);
  CHECK(bell_pairs[0].second.s == 2);

  CHECK(pure_pt_eigenpairs(canonical_schmidt({1.0, 0.0})).empty());

  const auto skew_pairs = pure_pt_eigenpairs(
      canonical_schmidt({std::sqrt(0.8), std::sqrt(0.2)}));
  REQUIRE(skew_pairs.size() == 1);
  CHECK(std::abs(skew_pairs[0].first + 0.4) < 1e-12);
}

TEST_CASE("pure_pt_eigenpairs rejects non-canonical decompositions") {
  Rng rng(6);
  SchmidtDecomposition sd = schmidt(bell_ket());
  sd.basis_a = random_unitary(2, rng);  // break canonicity
  CHECK_THROWS_AS(pure_pt_eigenpairs(sd), validation_error);
}

TEST_CASE("closed-form PT spectrum matches on random canonical pure states") {
  int checked = 0;
  for (int n : {2, 3, 4}) {
    const int trials = n == 2 ? 66 : 67;
    for (int trial = 0; trial < trials; ++trial) {
      const Ket psi = random_pure(n, derive_seed(31337, n * 1000 + trial));
      const SchmidtDecomposition sd = canonical_schmidt(schmidt(psi).coeffs);
      const DensityMatrix rho =
          DensityMatrix::from_ket(Ket(n, reconstruct_ket(sd)));
      const ComplexMatrix pt = partial_transpose(rho.mat(), n);

      std::vector<double> observed;
      for (double v : hermitian_eigenvalues(pt))
        if (v < -1e-9) observed.push_back(v);

      const auto predicted = pure_pt_eigenpairs(sd);
      REQUIRE(observed.size() == predicted.size());
      CHECK(static_cast<int>(observed.size()) <= pair_count(n));

      std::vector<double> expected;
      for (const auto& [value, vec] : predicted) {
        expected.push_back(value);
        // Eigenvector residual.
        const auto image = matvec(pt, vec.vec);
        double resid = 0.0;
        for (std::size_t i = 0; i < image.size(); ++i)
          resid += std::norm(image[i] - value * vec.vec[i]);
        CHECK(std::sqrt(resid) < 1e-9);
      }
      std::sort(observed.begin(), observed.end());
      std::sort(expected.begin(), expected.end());
      for (std::size_t i = 0; i < observed.size(); ++i)
        CHECK(std::abs(observed[i] - expected[i]) < 1e-9);
      ++checked;
    }
  }
  CHECK(checked == 200);
}

TEST_CASE("negativity examples") {
  ComplexMatrix diag(4, 4);
  diag(0, 0) = 0.5;
  diag(3, 3) = 0.5;
  CHECK(negativity(validate_density(diag, 2)) < 1e-12);

  CHECK(std::abs(negativity(validate_density(bell_density_mat(), 2)) - 0.5) <
        1e-12);
}

TEST_CASE("negativity of canonical pure states is R_s/2") {
  for (int n : {2, 3, 4}) {
    for (int trial = 0; trial < 15; ++trial) {
      const Ket psi = random_pure(n, derive_seed(77, n * 100 + trial));
      const std::vector<double> coeffs = schmidt(psi).coeffs;
      const SchmidtDecomposition sd = canonical_schmidt(coeffs);
      const DensityMatrix rho =
          DensityMatrix::from_ket(Ket(n, reconstruct_ket(sd)));

      double pair_sum = 0.0;
      for (const auto& [r, s] : antisym_pairs(n))
        pair_sum += coeffs[r - 1] * coeffs[s - 1];
      CHECK(std::abs(negativity(rho) - pair_sum) < 1e-10);

      const double r_s = robustness_pure(coeffs).r_s;
      CHECK(std::abs(2.0 * negativity(rho) - r_s) < 1e-10);
    }
  }
}
