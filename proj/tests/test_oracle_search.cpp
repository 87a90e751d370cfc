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

#include "robustkit/oracle_search.hpp"
#include "robustkit/ppt.hpp"
#include "robustkit/robustness.hpp"
#include "test_support.hpp"

using namespace robustkit;
using namespace robustkit::testing;

namespace {

DensityMatrix bell_density() {
  return validate_density(bell_density_mat(), 2);
}

DensityMatrix maximally_mixed() {
  return validate_density(maximally_mixed_mat(4), 2);
}

}  // namespace

TEST_CASE("max_a_for_mixer recovers the Werner threshold") {
  const MaxAResult r = max_a_for_mixer(bell_density(), maximally_mixed());
  CHECK(r.feasible);
  CHECK(std::abs(r.a - 1.0 / 3.0) < 2e-6);
}

TEST_CASE("max_a_for_mixer returns 1 when everything is separable") {
  ComplexMatrix diag(4, 4);
  diag(0, 0) = 0.5;
  diag(3, 3) = 0.5;
  const MaxAResult r =
      max_a_for_mixer(validate_density(diag, 2), maximally_mixed());
  CHECK(r.feasible);
  CHECK(r.a == 1.0);
}

TEST_CASE("max_a_for_mixer finds the knife-edge Gershgorin point") {
  // The feasible set of (Bell, G2) is the single point a = 1/2.
  const MixerReport g2 = gershgorin_mixer(
      canonical_schmidt({1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)}));
  const MaxAResult r = max_a_for_mixer(bell_density(), g2.mixer);
  CHECK(r.feasible);
  CHECK(std::abs(r.a - 0.5) < 2e-6);
}

TEST_CASE("max_a_for_mixer flags fully infeasible segments") {
  // Bell mixed with itself is never PPT.
  const MaxAResult r = max_a_for_mixer(bell_density(), bell_density());
  CHECK_FALSE(r.feasible);
  CHECK(r.a == 0.0);
}

TEST_CASE("estimate_O_g with the Gershgorin seed is exact on Bell") {
  SearchConfig cfg;
  cfg.iterations = 50;
  cfg.seed = 1;
  const SearchResult res = estimate_O_g(bell_density(), cfg);
  CHECK(std::abs(res.best_a - 0.5) < 1e-6);

  // The reported mixture is PPT at the reported weight.
  const DensityMatrix mixture = DensityMatrix::unchecked(
      linear_combination(res.best_a, bell_density().mat(), 1.0 - res.best_a,
                         res.best_mixer.mat()),
      2);
  CHECK(is_ppt(mixture));
}

TEST_CASE("estimate_O_g without the seed brackets the Bell optimum") {
  SearchConfig cfg;
  cfg.iterations = 2000;
  cfg.seed = 3;
  cfg.include_gershgorin_seed = false;
  const SearchResult res = estimate_O_g(bell_density(), cfg);
  CHECK(res.best_a >= 0.48);
  CHECK(res.best_a <= 0.5 + 1e-6);
}

TEST_CASE("estimate_O_g reproduces 5/9 on the skew state") {
  SearchConfig cfg;
  cfg.iterations = 50;
  cfg.seed = 4;
  const SearchResult res =
      estimate_O_g(DensityMatrix::from_ket(skew_ket()), cfg);
  CHECK(std::abs(res.best_a - 5.0 / 9.0) < 1e-6);
}

TEST_CASE("estimate_O_g returns 1 for separable pure states") {
  SearchConfig cfg;
  cfg.iterations = 5;
  cfg.seed = 2;
  const SearchResult res =
      estimate_O_g(DensityMatrix::from_ket(product_ket()), cfg);
  CHECK(res.best_a == 1.0);
}

TEST_CASE("estimate_O_g is deterministic and monotone along the trace") {
  SearchConfig cfg;
  cfg.iterations = 300;
  cfg.seed = 77;
  const SearchResult a = estimate_O_g(bell_density(), cfg);
  const SearchResult b = estimate_O_g(bell_density(), cfg);
  CHECK(a.best_a == b.best_a);
  CHECK(a.trace == b.trace);
  CHECK(max_entry_diff(a.best_mixer.mat(), b.best_mixer.mat()) == 0.0);
  for (std::size_t i = 1; i < a.trace.size(); ++i)
    CHECK(a.trace[i].second >= a.trace[i - 1].second);
}

TEST_CASE("estimate_O_g flags the PPT relaxation at n = 3 and rejects n > 3") {
  SearchConfig cfg;
  cfg.iterations = 5;
  const SearchResult res = estimate_O_g(random_density(3, 5), cfg);
  CHECK(res.ppt_relaxation);

  CHECK_THROWS_AS(estimate_O_g(random_density(4, 5), cfg), unsupported_error);
}

TEST_CASE("examined weights never beat the closed-form ceiling") {
  for (int trial = 0; trial < 8; ++trial) {
    const Ket psi = random_pure(2, derive_seed(2718, trial));
    const double o_g = robustness_pure(schmidt(psi).coeffs).o_g;
    SearchConfig cfg;
    cfg.iterations = 150;
    cfg.seed = derive_seed(999, trial);
    const SearchResult res =
        estimate_O_g(DensityMatrix::from_ket(psi), cfg);
    CHECK(res.max_examined_a <= o_g + 1e-6);
    CHECK(std::abs(res.best_a - o_g) < 1e-6);  // the seed is optimal
  }
}

TEST_CASE("verify_pure_optimum on a short run") {
  const PureOptimumReport rep = verify_pure_optimum(10, 20260808, 120);
  CHECK(rep.trials == 10);
  CHECK(rep.passes == 10);
  CHECK(rep.max_seeded_deviation <= 1e-6);
  CHECK(rep.max_overshoot <= 1e-6);
}
