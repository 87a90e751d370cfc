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

#ifndef ROBUSTKIT_SELFTEST_HPP
#define ROBUSTKIT_SELFTEST_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "robustkit/tolerances.hpp"

namespace robustkit {

struct SelftestConfig {
  /// Largest local dimension exercised (suites sweep n = 2 .. max_n).
  int max_n = 4;
  /// Samples per suite and dimension; 0 runs nothing and passes.
  int trials = 50;
  std::uint64_t seed = 20260808;
  /// Negative-control hook: routes the spectrum suite through a corrupted
  /// partial transpose so the suite must fail.
  bool corrupt_pt = false;
  Tolerances tol;
};

struct SuiteResult {
  std::string name;
  int checks = 0;
  int failures = 0;
};

struct SelftestReport {
  std::vector<SuiteResult> suites;

  bool passed() const {
    for (const SuiteResult& s : suites)
      if (s.failures > 0) return false;
    return true;
  }
  int total_checks() const {
    int sum = 0;
    for (const SuiteResult& s : suites) sum += s.checks;
    return sum;
  }
};

/// Runs the invariant suites: closed-form PT spectra, the g-sum identity,
/// the T bound with its Gershgorin equality case, and the pure-state
/// optimum oracle verification at n = 2.
SelftestReport run_selftest(const SelftestConfig& cfg);

}  // namespace robustkit

#endif  // ROBUSTKIT_SELFTEST_HPP
