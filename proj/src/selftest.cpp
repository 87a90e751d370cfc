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

#include "robustkit/selftest.hpp"

#include <algorithm>
#include <cmath>

#include "robustkit/indexing.hpp"
#include "robustkit/oracle_search.hpp"
#include "robustkit/robustness.hpp"

namespace robustkit {

namespace {

using PtFn = ComplexMatrix (*)(const ComplexMatrix&, int);

ComplexMatrix corrupted_partial_transpose(const ComplexMatrix& m, int n) {
  ComplexMatrix out = partial_transpose(m, n);
  // Hermitian perturbation so the eigensolver still accepts the input.
  out(0, 1) += 1e-3;
  out(1, 0) += 1e-3;
  return out;
}

// Multiset comparison of PT eigenvalues below -tol against the closed form
// {-a_r a_s}.
bool pt_spectrum_matches_closed_form(const SchmidtDecomposition& sd, PtFn pt,
                            const Tolerances& tol) {
  const int n = sd.n;
  const DensityMatrix rho = DensityMatrix::from_ket(
      Ket(n, reconstruct_ket(sd)));
  const ComplexMatrix pt_mat = pt(rho.mat(), n);

  std::vector<double> observed;
  for (double v : hermitian_eigenvalues(pt_mat))
    if (v < -tol.ppt) observed.push_back(v);

  std::vector<double> predicted;
  for (const auto& [value, vec] : pure_pt_eigenpairs(sd, tol.pair_skip)) {
    predicted.push_back(value);
    // Eigenvector residual ||pt(rho) e - value e||.
    std::vector<cplx> image = matvec(pt_mat, vec.vec);
    double resid = 0.0;
    for (std::size_t i = 0; i < image.size(); ++i)
      resid += std::norm(image[i] - value * vec.vec[i]);
    if (std::sqrt(resid) > 1e-9) return false;
  }

  if (observed.size() != predicted.size()) return false;
  if (static_cast<int>(observed.size()) > pair_count(n)) return false;
  std::sort(observed.begin(), observed.end());
  std::sort(predicted.begin(), predicted.end());
  for (std::size_t i = 0; i < observed.size(); ++i)
    if (std::abs(observed[i] - predicted[i]) > 1e-9) return false;
  return true;
}

}  // namespace

SelftestReport run_selftest(const SelftestConfig& cfg) {
  if (cfg.max_n < 2 || cfg.max_n > kMaxLocalDim)
    throw validation_error("selftest: max_n out of range [2, 8]");
  if (cfg.trials < 0) throw validation_error("selftest: trials < 0");

  const PtFn pt =
      cfg.corrupt_pt ? &corrupted_partial_transpose : &partial_transpose;
  SelftestReport report;

  {
    SuiteResult suite{"pt_spectrum_closed_form", 0, 0};
    for (int n = 2; n <= cfg.max_n; ++n) {
      for (int trial = 0; trial < cfg.trials; ++trial) {
        const Ket psi =
            random_pure(n, derive_seed(cfg.seed, 10000ULL * n + trial));
        const SchmidtDecomposition sd =
            canonical_schmidt(schmidt(psi, cfg.tol).coeffs, cfg.tol);
        ++suite.checks;
        if (!pt_spectrum_matches_closed_form(sd, pt, cfg.tol)) ++suite.failures;
      }
    }
    report.suites.push_back(suite);
  }

  {
    SuiteResult suite{"g_sum_identity", 0, 0};
    for (int n = 2; n <= cfg.max_n; ++n) {
      Rng rng(derive_seed(cfg.seed, 777ULL + n));
      for (int trial = 0; trial < cfg.trials; ++trial) {
        std::vector<cplx> e(static_cast<std::size_t>(n) * n);
        double nrm = 0.0;
        for (cplx& z : e) {
          z = rng.complex_normal();
          nrm += std::norm(z);
        }
        nrm = std::sqrt(nrm);
        for (cplx& z : e) z /= nrm;
        const GCoefficients gc = g_coefficients(e, n);
        double sum = 0.0;
        for (double g : gc.g) sum += g;
        ++suite.checks;
        if (std::abs(sum - (1.0 - std::norm(gc.diag_sum))) > 1e-12)
          ++suite.failures;
      }
    }
    report.suites.push_back(suite);
  }

  {
    SuiteResult suite{"t_bound", 0, 0};
    for (int n = 2; n <= cfg.max_n; ++n) {
      for (int trial = 0; trial < cfg.trials; ++trial) {
        const Ket psi =
            random_pure(n, derive_seed(cfg.seed, 20000ULL * n + trial));
        const SchmidtDecomposition sd =
            canonical_schmidt(schmidt(psi, cfg.tol).coeffs, cfg.tol);
        if (sd.rank < 2) continue;
        const DensityMatrix rho_m =
            random_density(n, derive_seed(cfg.seed, 30000ULL * n + trial));
        ++suite.checks;
        if (!T_bound_check(sd, rho_m, cfg.tol)) ++suite.failures;

        // The Gershgorin mixer attains the bound.
        const MixerReport mixer = gershgorin_mixer(sd, cfg.tol);
        const double t_at_mixer = evaluate_T_candidate(sd, mixer.mixer, cfg.tol);
        const double r_s = robustness_pure(sd.coeffs).r_s;
        ++suite.checks;
        if (std::abs(t_at_mixer - 1.0 / r_s) > 1e-10) ++suite.failures;
      }
    }
    report.suites.push_back(suite);
  }

  {
    SuiteResult suite{"pure_optimum_oracle", 0, 0};
    const int trials = std::min(cfg.trials, 50);
    const PureOptimumReport check =
        verify_pure_optimum(trials, derive_seed(cfg.seed, 424242ULL), 150,
                            cfg.tol);
    suite.checks = check.trials;
    suite.failures = check.trials - check.passes;
    report.suites.push_back(suite);
  }

  return report;
}

}  // namespace robustkit
