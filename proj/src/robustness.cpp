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

#include "robustkit/robustness.hpp"

#include <cmath>

#include "robustkit/indexing.hpp"
#include "robustkit/oracle_search.hpp"

namespace robustkit {

namespace {

DensityMatrix canonical_density(const SchmidtDecomposition& sd) {
  const int n = sd.n;
  const int dim = n * n;
  ComplexMatrix m(dim, dim);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m(i * n + i, j * n + j) = sd.coeffs[i] * sd.coeffs[j];
  return DensityMatrix::unchecked(std::move(m), n);
}

void require_canonical(const SchmidtDecomposition& sd, const char* who) {
  if (!is_canonical(sd))
    throw validation_error(std::string(who) +
                           ": decomposition is not in canonical form");
}

}  // namespace

RobustnessReport robustness_pure(const std::vector<double>& coeffs,
                                 double norm_tol) {
  double sum = 0.0, sum_sq = 0.0;
  for (double c : coeffs) {
    if (c < 0.0 || !std::isfinite(c))
      throw validation_error("robustness_pure: coefficients must be >= 0");
    sum += c;
    sum_sq += c * c;
  }
  if (std::abs(sum_sq - 1.0) > norm_tol)
    throw validation_error("robustness_pure: coefficients not normalized");
  const double r = std::max(0.0, sum * sum - 1.0);
  const double o = 1.0 / (1.0 + r);
  return RobustnessReport{r, r, o, o, coeffs};
}

GCoefficients g_coefficients(const std::vector<cplx>& e, int n) {
  if (e.size() != static_cast<std::size_t>(n) * n)
    throw validation_error("g_coefficients: vector must have length n^2");
  double nrm = 0.0;
  for (const cplx& z : e) nrm += std::norm(z);
  if (std::abs(nrm - 1.0) > 1e-8)
    throw validation_error("g_coefficients: vector must be unit norm");

  GCoefficients out;
  out.g.resize(pair_count(n));
  out.diag_sum = 0.0;
  for (int j = 1; j <= n; ++j) out.diag_sum += e[index_c(j, j, n) - 1];
  for (const auto& [j, k] : antisym_pairs(n)) {
    const cplx ejk = e[index_c(j, k, n) - 1];
    const cplx ekj = e[index_c(k, j, n) - 1];
    const cplx ejj = e[index_c(j, j, n) - 1];
    const cplx ekk = e[index_c(k, k, n) - 1];
    out.g[index_f(j, k, n) - 1] = std::norm(ejk) + std::norm(ekj) -
                                  2.0 * (ejj * std::conj(ekk)).real();
  }
  return out;
}

double quadratic_form_pt(const DensityMatrix& rho_m, int j, int k,
                         double cross_check_fail) {
  const int n = rho_m.local_dim();
  if (j < 1 || k <= j || k > n)
    throw validation_error("quadratic_form_pt: requires 1 <= j < k <= n");

  const AntisymVector witness = antisym_vector(j, k, n);
  const ComplexMatrix pt = partial_transpose(rho_m.mat(), n);
  const double direct = quadratic_form(pt, witness.vec).real();

  // Independent route through the spectral decomposition of rho_M.
  const EigenSystem eig = hermitian_eigen(rho_m.mat());
  const int f = index_f(j, k, n);
  double via_g = 0.0;
  for (std::size_t i = 0; i < eig.eigenvalues.size(); ++i) {
    const GCoefficients gc = g_coefficients(eig.eigenvector(static_cast<int>(i)), n);
    via_g += eig.eigenvalues[i] * gc.g[f - 1];
  }
  via_g *= 0.5;

  if (std::abs(direct - via_g) > cross_check_fail)
    throw numeric_error(
        "quadratic_form_pt: direct and spectral routes diverged");
  return direct;
}

double witness_bound_a(const SchmidtDecomposition& sd,
                       const DensityMatrix& rho_m, const Tolerances& tol) {
  require_canonical(sd, "witness_bound_a");
  if (sd.n != rho_m.local_dim())
    throw validation_error("witness_bound_a: dimension mismatch");
  double bound = 1.0;
  bool any_pair = false;
  for (const auto& [j, k] : antisym_pairs(sd.n)) {
    const double product = sd.coeffs[j - 1] * sd.coeffs[k - 1];
    if (product <= tol.pair_skip) continue;
    any_pair = true;
    const double q = quadratic_form_pt(rho_m, j, k, tol.cross_check_fail);
    const double pair_bound = q > 0.0 ? q / (q + product) : 0.0;
    bound = std::min(bound, pair_bound);
  }
  return any_pair ? bound : 1.0;
}

double evaluate_T_candidate(const SchmidtDecomposition& sd,
                            const DensityMatrix& rho_m,
                            const Tolerances& tol) {
  require_canonical(sd, "evaluate_T_candidate");
  if (sd.n != rho_m.local_dim())
    throw validation_error("evaluate_T_candidate: dimension mismatch");
  if (sd.rank < 2)
    throw unsupported_error("evaluate_T_candidate: Schmidt rank < 2");
  bool first = true;
  double best = 0.0;
  for (const auto& [j, k] : antisym_pairs(sd.n)) {
    const double product = sd.coeffs[j - 1] * sd.coeffs[k - 1];
    if (product <= tol.pair_skip) continue;
    // alpha_jk = 2 <e|rho^pt|e>, so alpha/(2 a_j a_k) = q/product.
    const double h = quadratic_form_pt(rho_m, j, k, tol.cross_check_fail) /
                     product;
    if (first || h < best) best = h;
    first = false;
  }
  return best;
}

bool T_bound_check(const SchmidtDecomposition& sd, const DensityMatrix& rho_m,
                   const Tolerances& tol) {
  const RobustnessReport rep = robustness_pure(sd.coeffs);
  return evaluate_T_candidate(sd, rho_m, tol) <= 1.0 / rep.r_s + 1e-9;
}

MixerReport make_mixer_report(const SchmidtDecomposition& sd,
                              const DensityMatrix& rho_m,
                              const Tolerances& tol) {
  require_canonical(sd, "make_mixer_report");
  const double a = witness_bound_a(sd, rho_m, tol);
  const DensityMatrix rho = canonical_density(sd);
  DensityMatrix mixture = DensityMatrix::unchecked(
      linear_combination(a, rho.mat(), 1.0 - a, rho_m.mat()), sd.n);
  const bool mixer_ppt = is_ppt(rho_m, tol.ppt);
  const bool mixture_ppt = is_ppt(mixture, tol.ppt);
  return MixerReport{rho_m,     a,           std::move(mixture),
                     mixer_ppt, mixture_ppt, sd.coeffs};
}

MixerReport gershgorin_mixer(const SchmidtDecomposition& sd,
                             const Tolerances& tol) {
  require_canonical(sd, "gershgorin_mixer");
  if (sd.rank < 2)
    throw unsupported_error(
        "gershgorin_mixer: product state has no mixer (a = 1)");
  const int n = sd.n;
  const int dim = n * n;
  const RobustnessReport rep = robustness_pure(sd.coeffs);
  const double a = rep.o_g;

  const DensityMatrix rho = canonical_density(sd);
  ComplexMatrix g = (-a / (1.0 - a)) * rho.mat();

  ComplexMatrix g2 = g;
  for (int i = 0; i < dim; ++i) g2(i, i) = 0.0;
  for (int i = 0; i < dim; ++i) {
    cplx row_sum = 0.0;
    for (int k = 0; k < dim; ++k)
      if (k != i) row_sum += g(i, k);
    g2(i, i) = -row_sum;
  }

  // Diagonal dominance makes g2 PSD with unit trace; validated, not assumed.
  DensityMatrix mixer = validate_density(g2, n, tol);

  const double bound = witness_bound_a(sd, mixer, tol);
  if (std::abs(bound - a) > tol.mixer_bound_match)
    throw numeric_error("gershgorin_mixer: witness bound does not match O_g");

  DensityMatrix mixture = DensityMatrix::unchecked(
      linear_combination(a, rho.mat(), 1.0 - a, mixer.mat()), n);
  double off_diag = 0.0;
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c)
      if (r != c) off_diag = std::max(off_diag, std::abs(mixture.mat()(r, c)));
  if (off_diag > 1e-12)
    throw numeric_error("gershgorin_mixer: mixture is not diagonal");
  if (std::abs(mixture.mat().trace() - cplx(1.0, 0.0)) > tol.trace)
    throw numeric_error("gershgorin_mixer: mixture trace differs from 1");
  const bool mixture_ppt = is_ppt(mixture, tol.ppt);
  if (!mixture_ppt)
    throw numeric_error("gershgorin_mixer: mixture is not PPT");
  const bool mixer_ppt = is_ppt(mixer, tol.ppt);

  return MixerReport{std::move(mixer), bound,       std::move(mixture),
                     mixer_ppt,        mixture_ppt, sd.coeffs};
}

DensityMatrix gershgorin_mixer_for_ket(const Ket& psi, const Tolerances& tol) {
  const SchmidtDecomposition sd = schmidt(psi, tol);
  const MixerReport canonical = gershgorin_mixer(canonical_schmidt(sd.coeffs, tol), tol);
  const ComplexMatrix u = tensor(sd.basis_a, sd.basis_b);
  return DensityMatrix::unchecked(u * canonical.mixer.mat() * u.dagger(),
                                  sd.n);
}

PseudoMixture pseudo_mixture(const SchmidtDecomposition& sd,
                             const MixerReport& report,
                             const Tolerances& tol) {
  require_canonical(sd, "pseudo_mixture");
  if (report.bound_a <= 0.0)
    throw validation_error("pseudo_mixture: zero mixing weight");
  // R is the state's robustness. With rho_s taken from the report, the
  // decomposition reproduces rho exactly when the report's weight is the
  // optimum; a suboptimal mixer fails the identity below.
  const double r = robustness_pure(sd.coeffs).r_g;
  const DensityMatrix rho = canonical_density(sd);
  const ComplexMatrix recon = linear_combination(
      1.0 + r, report.mixture.mat(), -r, report.mixer.mat());
  if (max_entry_diff(recon, rho.mat()) > 1e-10)
    throw validation_error(
        "pseudo_mixture: mixer is suboptimal, decomposition does not "
        "reproduce the state");
  if (!is_ppt(report.mixture, tol.ppt))
    throw validation_error("pseudo_mixture: mixture is not PPT");
  return PseudoMixture{report.mixture, r};
}

MixerReport combine_mixers(const MixerReport& m1, const MixerReport& m2,
                           double t, const Tolerances& tol) {
  if (t < 0.0 || t > 1.0)
    throw validation_error("combine_mixers: t must lie in [0, 1]");
  if (m1.coeffs.size() != m2.coeffs.size())
    throw validation_error("combine_mixers: mixers target different states");
  for (std::size_t i = 0; i < m1.coeffs.size(); ++i)
    if (std::abs(m1.coeffs[i] - m2.coeffs[i]) > 1e-10)
      throw validation_error("combine_mixers: mixers target different states");
  if (std::abs(m1.bound_a - m2.bound_a) > tol.mixer_bound_match)
    throw validation_error("combine_mixers: bounds are not equal (one mixer "
                           "is suboptimal)");

  const SchmidtDecomposition sd = canonical_schmidt(m1.coeffs, tol);
  const DensityMatrix blend = DensityMatrix::unchecked(
      linear_combination(t, m1.mixer.mat(), 1.0 - t, m2.mixer.mat()), sd.n);
  MixerReport out = make_mixer_report(sd, blend, tol);
  if (std::abs(out.bound_a - m1.bound_a) > 1e-9)
    throw numeric_error("combine_mixers: blended bound drifted from optimum");
  return out;
}

ConvexityVerdict convexity_check(const Ket& psi1, const Ket& psi2, double p,
                                 const Tolerances& tol) {
  if (psi1.local_dim() != 2 || psi2.local_dim() != 2)
    throw unsupported_error("convexity_check: exact only at n = 2");
  if (p < 0.0 || p > 1.0)
    throw validation_error("convexity_check: p must lie in [0, 1]");

  const SchmidtDecomposition sd1 = schmidt(psi1, tol);
  const SchmidtDecomposition sd2 = schmidt(psi2, tol);
  const RobustnessReport r1 = robustness_pure(sd1.coeffs);
  const RobustnessReport r2 = robustness_pure(sd2.coeffs);
  const double bound = p * r1.r_g + (1.0 - p) * r2.r_g;

  const DensityMatrix rho1 = DensityMatrix::from_ket(psi1);
  const DensityMatrix rho2 = DensityMatrix::from_ket(psi2);
  const DensityMatrix blend = DensityMatrix::unchecked(
      linear_combination(p, rho1.mat(), 1.0 - p, rho2.mat()), 2);

  // The components' Gershgorin mixers and their blends are strong
  // structural seeds; every candidate is still feasibility-certified, so
  // the estimate remains an upper bound on R_g of the blend.
  std::vector<DensityMatrix> seeds;
  if (sd1.rank >= 2) seeds.push_back(gershgorin_mixer_for_ket(psi1, tol));
  if (sd2.rank >= 2) seeds.push_back(gershgorin_mixer_for_ket(psi2, tol));
  if (seeds.size() == 2) {
    for (double t : {p, 0.25, 0.5, 0.75})
      seeds.push_back(DensityMatrix::unchecked(
          linear_combination(t, seeds[0].mat(), 1.0 - t, seeds[1].mat()), 2));
  }

  SearchConfig cfg;
  cfg.iterations = 2000;
  cfg.seed = 0x5eedf00dULL;
  const SearchResult res = estimate_O_g(blend, cfg, tol, seeds);
  const double estimate = 1.0 / res.best_a - 1.0;

  return ConvexityVerdict{estimate <= bound + tol.convexity_slack, estimate,
                          bound};
}

}  // namespace robustkit
