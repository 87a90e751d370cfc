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

#ifndef ROBUSTKIT_ORACLE_SEARCH_HPP
#define ROBUSTKIT_ORACLE_SEARCH_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "robustkit/states.hpp"

namespace robustkit {

struct SearchConfig {
  int iterations = 2000;
  std::uint64_t seed = 0;
  /// Initial proposal weight; halves after repeated rejections (floor 1e-3).
  double step_scale = 0.1;
  double a_resolution = 1e-6;
  bool include_gershgorin_seed = true;
};

struct MaxAResult {
  double a;
  /// False when no point of the segment is PPT (then a = 0).
  bool feasible;
};

/// Largest a in [0, 1] with a rho + (1-a) rho_M PPT, to the given
/// resolution. lambda_min of the partially transposed mixture is concave in
/// a, so the feasible set is an interval (not necessarily containing 0);
/// located by concave peak search plus upper-edge bisection.
MaxAResult max_a_for_mixer(const DensityMatrix& rho,
                           const DensityMatrix& rho_m,
                           double resolution = 1e-6, double ppt_tol = 1e-9);

struct SearchResult {
  double best_a;
  DensityMatrix best_mixer;
  /// (iteration, best_a) checkpoints; non-decreasing in best_a.
  std::vector<std::pair<int, double>> trace;
  /// Largest feasible a seen across all candidates, accepted or not.
  double max_examined_a;
  /// True at n = 3, where PPT is only necessary for separability.
  bool ppt_relaxation;
};

/// Derivative-free maximization of the admissible weight over mixers:
/// hill climbing from the maximally mixed state (plus the Gershgorin seed
/// for pure inputs when enabled), proposing blends of the incumbent with
/// random Ginibre states. Deterministic per config. n = 2 is exact
/// (PPT <=> separable); n = 3 is flagged as a PPT relaxation; larger n is
/// rejected. Callers with structural knowledge may supply extra seed
/// mixers; every candidate is feasibility-certified, so the result stays a
/// lower bound on the optimal weight.
SearchResult estimate_O_g(const DensityMatrix& rho, const SearchConfig& cfg,
                          const Tolerances& tol = {},
                          const std::vector<DensityMatrix>& extra_seeds = {});

struct PureOptimumTrial {
  double o_exact;      // 1/(1 + R_s)
  double seeded_best;  // oracle with the Gershgorin seed
  double overshoot;    // max over both runs of (examined a) - o_exact
  bool passed;
};

struct PureOptimumReport {
  int trials = 0;
  int passes = 0;
  double max_seeded_deviation = 0.0;
  double max_overshoot = 0.0;
  std::vector<PureOptimumTrial> per_trial;

  bool passed() const { return passes == trials; }
};

/// For random two-qubit pure states: the seeded oracle must reproduce
/// 1/(1 + R_s) within 1e-6 and no iterate of either the seeded or the
/// unseeded run may exceed it by more than 1e-6.
PureOptimumReport verify_pure_optimum(int trials, std::uint64_t seed,
                                  int iterations = 200,
                                  const Tolerances& tol = {});

}  // namespace robustkit

#endif  // ROBUSTKIT_ORACLE_SEARCH_HPP
