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

#ifndef ROBUSTKIT_TOLERANCES_HPP
#define ROBUSTKIT_TOLERANCES_HPP

namespace robustkit {

/// The one knob surface for numerical tolerances. Defaults are the library
/// contract; the CLI can override them from a JSON file (--tol-file or
/// ROBUSTKIT_TOL).
struct Tolerances {
  /// max |M - M^dagger| accepted before symmetrization.
  double hermitian = 1e-10;
  /// Density matrices may have eigenvalues down to -psd.
  double psd = 1e-9;
  /// |trace - 1| for density matrices.
  double trace = 1e-10;
  /// | ||psi|| - 1 | for kets.
  double ket_norm = 1e-10;
  /// PT eigenvalues below -ppt classify a state as NPT.
  double ppt = 1e-9;
  /// Schmidt-coefficient products at or below this skip their witness pair.
  double pair_skip = 1e-9;
  /// Schmidt coefficients below this clamp to exactly zero.
  double schmidt_clamp = 1e-12;
  /// Divergence of the two quadratic-form routes that raises an error.
  double cross_check_fail = 1e-8;
  /// Gershgorin mixer: |witness bound - O_g| allowed.
  double mixer_bound_match = 1e-10;
  /// convexity_check estimator slack on the robustness scale.
  double convexity_slack = 0.02;
};

}  // namespace robustkit

#endif  // ROBUSTKIT_TOLERANCES_HPP
