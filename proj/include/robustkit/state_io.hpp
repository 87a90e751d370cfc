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

#ifndef ROBUSTKIT_STATE_IO_HPP
#define ROBUSTKIT_STATE_IO_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "robustkit/states.hpp"

namespace robustkit {

/// A parsed state file: {"kind": "ket"|"density", "n": int, "data": ...}
/// with complex numbers as [re, im] pairs.
struct LoadedState {
  std::string kind;
  int n = 0;
  std::optional<Ket> ket;
  std::optional<DensityMatrix> density;
  std::string digest;  // FNV-1a of the raw file bytes
};

LoadedState read_state_file(const std::string& path,
                            const Tolerances& tol = {});

/// The density view of a loaded state (kets become projectors).
DensityMatrix as_density(const LoadedState& state);

nlohmann::json ket_to_json(const Ket& psi);
nlohmann::json density_to_json(const DensityMatrix& rho);
nlohmann::json matrix_to_json(const ComplexMatrix& m);
nlohmann::json complex_vector_to_json(const std::vector<cplx>& v);

void write_state_file(const std::string& path, const nlohmann::json& body);

/// Deterministic serialization: keys sorted (nlohmann's default object
/// ordering), floats printed with up to 17 significant digits via
/// std::to_chars (locale-independent, lossless).
std::string dump_json(const nlohmann::json& j);

std::string fnv1a_hex(const std::string& bytes);

/// Tolerance overrides from a JSON object of {field: value}; unknown keys
/// are rejected. Sources: explicit --tol-file path, else the ROBUSTKIT_TOL
/// environment variable (a path), else defaults.
Tolerances load_tolerances(const std::optional<std::string>& tol_file);

nlohmann::json tolerances_to_json(const Tolerances& tol);

}  // namespace robustkit

#endif  // ROBUSTKIT_STATE_IO_HPP
