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

#ifndef ROBUSTKIT_KERNELS_HPP
#define ROBUSTKIT_KERNELS_HPP

#include <complex>
#include <cstddef>

namespace robustkit::kernels {

using cplx = std::complex<double>;

/// The data-parallel inner loops everything else is built on. Each entry has
/// a scalar reference implementation and (on x86 with AVX2+FMA) a vectorized
/// variant; the active set is chosen once at runtime.
struct Ops {
  /// y[i] += a * x[i]
  void (*axpy)(cplx a, const cplx* x, cplx* y, std::size_t count);
  /// x[i] *= a
  void (*scal)(cplx a, cplx* x, std::size_t count);
  /// sum_i conj(x[i]) * y[i]
  cplx (*cdotc)(const cplx* x, const cplx* y, std::size_t count);
  /// (u[i], v[i]) <- (a*u[i] + b*v[i], c*u[i] + d*v[i])
  void (*rot2)(cplx a, cplx b, cplx c, cplx d, cplx* u, cplx* v,
               std::size_t count);
  const char* name;
};

/// Reference kernels; always available.
const Ops& scalar_ops();

/// AVX2+FMA kernels, or nullptr when the build or the CPU lacks them.
const Ops* avx2_ops();

/// Runtime-selected kernel set. Honors ROBUSTKIT_KERNELS=scalar|avx2
/// (an unsatisfiable request falls back to scalar).
const Ops& active();

}  // namespace robustkit::kernels

#endif  // ROBUSTKIT_KERNELS_HPP
