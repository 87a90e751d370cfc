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

#ifndef ROBUSTKIT_ERRORS_HPP
#define ROBUSTKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace robustkit {

/// Malformed or out-of-contract input (bad dimensions, failed state
/// validation, unparsable files). CLI exit code 2.
struct validation_error : std::runtime_error {
  explicit validation_error(const std::string& what)
      : std::runtime_error(what) {}
};

/// Structurally valid input the operation does not support (mixed states
/// where a pure state is required, product states for the mixer
/// construction, n too large). CLI exit code 3.
struct unsupported_error : std::runtime_error {
  explicit unsupported_error(const std::string& what)
      : std::runtime_error(what) {}
};

/// Numerical failure: eigensolver non-convergence, internal cross-check
/// divergence. Always a bug or a pathological input.
struct numeric_error : std::runtime_error {
  explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace robustkit

#endif  // ROBUSTKIT_ERRORS_HPP
