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

#include "robustkit/oracle_search.hpp"

#include <cmath>
#include <cstdlib>

#include "robustkit/ppt.hpp"
#include "robustkit/robustness.hpp"

namespace robustkit {

namespace {

constexpr double kPurityPureTol = 1e-9;

DensityMatrix maximally_mixed(int n) {
  const int dim = n * n;
  ComplexMatrix m(dim, dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0 / dim;
  return DensityMatrix::unchecked(std::move(m), n);
}

/// Recovers the ket of a (numerically) rank-1 density matrix, or nothing.
std::optional<Ket> recover_pure(const DensityMatrix& rho) {
  if (rho.purity() < 1.0 - kPurityPureTol) return std::nullopt;
  const EigenSystem eig = hermitian_eigen(rho.mat());
  std::vector<cplx> top = eig.eigenvector(rho.dim() - 1);
  double nrm = 0.0;
  for (const cplx& z : top) nrm += std::norm(z);
  nrm = std::sqrt(nrm);
  for (cplx& z : top) z /= nrm;
  return Ket(rho.local_dim(), std::move(top));
}

// Ginibre-induced random state of the given rank: G is dim x rank.
DensityMatrix ginibre_from(Rng& rng, int n, int rank) {
  const int dim = n * n;
  ComplexMatrix g(dim, rank);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < rank; ++c) g(r, c) = rng.complex_normal();
  ComplexMatrix rho = g * g.dagger();
  rho *= 1.0 / rho.trace().real();
  return DensityMatrix::unchecked(std::move(rho), n);
}

}  // namespace

MaxAResult max_a_for_mixer(const DensityMatrix& rho,
                           const DensityMatrix& rho_m, double resolution,
                           double ppt_tol) {
  if (rho.local_dim() != rho_m.local_dim())
    throw validation_error("max_a_for_mixer: dimension mismatch");
  if (resolution <= 0.0 || resolution > 1e-3)
    throw validation_error("max_a_for_mixer: resolution out of (0, 1e-3]");
  const int n = rho.local_dim();
  const ComplexMatrix pt_rho = partial_transpose(rho.mat(), n);
  const ComplexMatrix pt_mix = partial_transpose(rho_m.mat(), n);

  const auto feasibility = [&](double a) {
    return min_eigenvalue(linear_combination(a, pt_rho, 1.0 - a, pt_mix)) +
           ppt_tol;
  };

  if (feasibility(1.0) >= 0.0) return {1.0, true};

  double lo;
  if (feasibility(0.0) >= 0.0) {
    lo = 0.0;
  } else {
    // The mixer itself is NPT. The feasible set, if nonempty, is an
    // interior interval; locate the concave peak of the feasibility
    // margin, bailing out as soon as any feasible point appears.
    double left = 0.0, right = 1.0;
    double found = -1.0;
    while (right - left > 1e-10) {
      const double m1 = left + (right - left) / 3.0;
      const double m2 = right - (right - left) / 3.0;
      const double f1 = feasibility(m1);
      const double f2 = feasibility(m2);
      if (f1 >= 0.0) {
        found = m1;
        break;
      }
      if (f2 >= 0.0) {
        found = m2;
        break;
      }
      if (f1 < f2)
        left = m1;
      else
        right = m2;
    }
    if (found < 0.0) {
      const double peak = 0.5 * (left + right);
      if (feasibility(peak) < 0.0) return {0.0, false};
      found = peak;
    }
    lo = found;
  }

  // Upper edge: the margin is decreasing right of the peak.
  double hi = 1.0;
  while (hi - lo > resolution) {
    const double mid = 0.5 * (lo + hi);
    if (feasibility(mid) >= 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return {lo, true};
}

SearchResult estimate_O_g(const DensityMatrix& rho, const SearchConfig& cfg,
                          const Tolerances& tol,
                          const std::vector<DensityMatrix>& extra_seeds) {
  const int n = rho.local_dim();
  if (n > 3)
    throw unsupported_error(
        "estimate_O_g: supported at n = 2 (exact) and n = 3 (PPT "
        "relaxation) only");
  if (cfg.iterations < 1)
    throw validation_error("estimate_O_g: iterations must be >= 1");
  if (cfg.a_resolution <= 0.0 || cfg.a_resolution > 1e-3)
    throw validation_error("estimate_O_g: a_resolution out of (0, 1e-3]");

  SearchResult result{0.0, maximally_mixed(n), {}, 0.0, n == 3};

  const auto consider = [&](int iteration, const DensityMatrix& cand) {
    const MaxAResult r =
        max_a_for_mixer(rho, cand, cfg.a_resolution, tol.ppt);
    if (!r.feasible) return;
    result.max_examined_a = std::max(result.max_examined_a, r.a);
    if (r.a > result.best_a) {
      result.best_a = r.a;
      result.best_mixer = cand;
      result.trace.emplace_back(iteration, r.a);
    }
  };

  consider(0, result.best_mixer);

  if (cfg.include_gershgorin_seed) {
    if (const std::optional<Ket> psi = recover_pure(rho)) {
      if (schmidt(*psi, tol).rank >= 2)
        consider(0, gershgorin_mixer_for_ket(*psi, tol));
    }
  }
  for (const DensityMatrix& seed_mixer : extra_seeds) {
    if (seed_mixer.local_dim() != n)
      throw validation_error("estimate_O_g: seed mixer dimension mismatch");
    consider(0, seed_mixer);
  }

  // Step schedule: decay on repeated rejection, recover on acceptance.
  // Calibrated against the Bell-state no-seed floor (>= 0.48 in 2000
  // iterations).
  constexpr int kStallLimit = 15;
  constexpr double kShrink = 0.85;
  constexpr double kStepFloor = 0.04;
  constexpr double kGrow = 1.4;

  Rng rng(cfg.seed);
  double step = std::min(cfg.step_scale, 1.0);
  int stall = 0;
  const int dim = n * n;
  for (int it = 1; it <= cfg.iterations; ++it) {
    // Random-rank draws let the proposals both spread and sharpen the
    // incumbent mixer.
    const int rank = 1 + static_cast<int>(rng.uniform() * dim);
    const DensityMatrix proposal = ginibre_from(rng, n, std::min(rank, dim));
    const DensityMatrix candidate = DensityMatrix::unchecked(
        linear_combination(1.0 - step, result.best_mixer.mat(), step,
                           proposal.mat()),
        n);
    const double before = result.best_a;
    consider(it, candidate);
    if (result.best_a > before + 1e-12) {
      stall = 0;
      step = std::min(cfg.step_scale, step * kGrow);
    } else if (++stall >= kStallLimit) {
      step = std::max(kShrink * step, std::min(kStepFloor, cfg.step_scale));
      stall = 0;
    }
  }
  return result;
}

PureOptimumReport verify_pure_optimum(int trials, std::uint64_t seed,
                                  int iterations, const Tolerances& tol) {
  if (trials < 0) throw validation_error("verify_pure_optimum: trials < 0");
  PureOptimumReport report;
  report.trials = trials;
  for (int trial = 0; trial < trials; ++trial) {
    const Ket psi = random_pure(2, derive_seed(seed, trial));
    const SchmidtDecomposition sd = schmidt(psi, tol);
    const double o_exact = robustness_pure(sd.coeffs).o_g;
    const DensityMatrix rho = DensityMatrix::from_ket(psi);

    SearchConfig cfg;
    cfg.iterations = iterations;
    cfg.seed = derive_seed(seed, 1000003ULL + trial);
    cfg.a_resolution = 1e-7;

    cfg.include_gershgorin_seed = true;
    const SearchResult seeded = estimate_O_g(rho, cfg, tol);
    cfg.include_gershgorin_seed = false;
    const SearchResult unseeded = estimate_O_g(rho, cfg, tol);

    PureOptimumTrial t{};
    t.o_exact = o_exact;
    t.seeded_best = seeded.best_a;
    t.overshoot = std::max(seeded.max_examined_a - o_exact,
                           unseeded.max_examined_a - o_exact);
    t.passed = std::abs(seeded.best_a - o_exact) <= 1e-6 &&
               t.overshoot <= 1e-6;

    report.max_seeded_deviation = std::max(
        report.max_seeded_deviation, std::abs(seeded.best_a - o_exact));
    report.max_overshoot = std::max(report.max_overshoot, t.overshoot);
    if (t.passed) ++report.passes;
    report.per_trial.push_back(t);
  }
  return report;
}

}  // namespace robustkit
