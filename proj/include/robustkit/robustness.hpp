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

#ifndef ROBUSTKIT_ROBUSTNESS_HPP
#define ROBUSTKIT_ROBUSTNESS_HPP

#include <vector>

#include "robustkit/ppt.hpp"
#include "robustkit/states.hpp"

namespace robustkit {

/// Robustness of a pure state. For pure states the generalized and the
/// separable-mixer values coincide, so both pairs carry the same numbers:
/// R = (sum_i a_i)^2 - 1 and O = 1/(1 + R).
struct RobustnessReport {
  double r_s;
  double r_g;
  double o_s;
  double o_g;
  std::vector<double> schmidt_coeffs;
};

RobustnessReport robustness_pure(const std::vector<double>& coeffs,
                                 double norm_tol = 1e-10);

/// Per-eigenvector witness coefficients
///   g_f(j,k) = |e_c(j,k)|^2 + |e_c(k,j)|^2 - 2 Re(e_c(j,j) conj(e_c(k,k)))
/// together with diag_sum = sum_j e_c(j,j). They satisfy
/// sum_k g_k = 1 - |diag_sum|^2 for unit vectors.
struct GCoefficients {
  std::vector<double> g;  // indexed by f(j,k) - 1
  cplx diag_sum;
};

GCoefficients g_coefficients(const std::vector<cplx>& e, int n);

/// <e_f(j,k)| rho_M^pt |e_f(j,k)>, computed both directly and as
/// (1/2) sum_i lambda_i g^(i)_f(j,k); throws when the two routes diverge
/// beyond cross_check_fail. 1-based pair j < k.
double quadratic_form_pt(const DensityMatrix& rho_m, int j, int k,
                         double cross_check_fail = 1e-8);

/// Largest mixing weight not excluded by the antisymmetric witnesses: the
/// min over pairs of q/(q + a_j a_k) with q the quadratic form (0 when
/// q <= 0), or 1 for product states. Every weight above it makes the
/// mixture non-PPT, hence entangled. sd must be canonical.
double witness_bound_a(const SchmidtDecomposition& sd,
                       const DensityMatrix& rho_m,
                       const Tolerances& tol = {});

/// min over pairs j < k of alpha_jk / (2 a_j a_k), the inner value of the
/// max-min problem; requires Schmidt rank >= 2.
double evaluate_T_candidate(const SchmidtDecomposition& sd,
                            const DensityMatrix& rho_m,
                            const Tolerances& tol = {});

/// evaluate_T_candidate <= 1/R + 1e-9.
bool T_bound_check(const SchmidtDecomposition& sd, const DensityMatrix& rho_m,
                   const Tolerances& tol = {});

/// A candidate mixer evaluated against the canonical state of sd.
struct MixerReport {
  DensityMatrix mixer;
  double bound_a;
  DensityMatrix mixture;  // bound_a * rho + (1 - bound_a) * mixer
  bool mixer_is_ppt;
  bool mixture_is_ppt;
  /// Schmidt coefficients of the state the report was built for.
  std::vector<double> coeffs;
};

MixerReport make_mixer_report(const SchmidtDecomposition& sd,
                              const DensityMatrix& rho_m,
                              const Tolerances& tol = {});

/// The Gershgorin-disk mixer: with a = O_g, form G = -a rho/(1-a), zero the
/// diagonal, then set G2_ii = -sum_{k != i} G_ik. G2 is PSD by diagonal
/// dominance and mixes with rho to a diagonal separable state at weight a.
/// Rejects product states (rank < 2). The report's bound must reproduce a.
MixerReport gershgorin_mixer(const SchmidtDecomposition& sd,
                             const Tolerances& tol = {});

/// The same mixer conjugated into psi's frame by the Schmidt local
/// unitaries, optimal for psi itself.
DensityMatrix gershgorin_mixer_for_ket(const Ket& psi,
                                       const Tolerances& tol = {});

struct PseudoMixture {
  DensityMatrix rho_s;
  double r;
};

/// The decomposition rho = (1+R) rho_s - R rho_M behind an optimal mixer;
/// throws when the report's mixer is suboptimal (identity fails).
PseudoMixture pseudo_mixture(const SchmidtDecomposition& sd,
                             const MixerReport& report,
                             const Tolerances& tol = {});

/// Convex blend of two optimal mixers for the same state; optimal again.
MixerReport combine_mixers(const MixerReport& m1, const MixerReport& m2,
                           double t, const Tolerances& tol = {});

struct ConvexityVerdict {
  bool passed;
  double estimate;  // estimated R_g of the blend
  double bound;     // p R_1 + (1-p) R_2
};

/// Numeric convexity test at n = 2: estimated R_g of p rho_1 + (1-p) rho_2
/// must not exceed the convex bound plus the estimator slack.
ConvexityVerdict convexity_check(const Ket& psi1, const Ket& psi2, double p,
                                 const Tolerances& tol = {});

}  // namespace robustkit

#endif  // ROBUSTKIT_ROBUSTNESS_HPP
