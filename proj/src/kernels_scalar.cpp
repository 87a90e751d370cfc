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

#include "robustkit/kernels.hpp"

// Reference kernels. Complex products are spelled out on re/im parts so the
// compiler does not route through __muldc3.

namespace robustkit::kernels {

namespace {

void axpy_scalar(cplx a, const cplx* x, cplx* y, std::size_t count) {
  const double ar = a.real(), ai = a.imag();
  for (std::size_t i = 0; i < count; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    y[i] += cplx(ar * xr - ai * xi, ar * xi + ai * xr);
  }
}

void scal_scalar(cplx a, cplx* x, std::size_t count) {
  const double ar = a.real(), ai = a.imag();
  for (std::size_t i = 0; i < count; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    x[i] = cplx(ar * xr - ai * xi, ar * xi + ai * xr);
  }
}

cplx cdotc_scalar(const cplx* x, const cplx* y, std::size_t count) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    const double yr = y[i].real(), yi = y[i].imag();
    re += xr * yr + xi * yi;
    im += xr * yi - xi * yr;
  }
  return {re, im};
}

void rot2_scalar(cplx a, cplx b, cplx c, cplx d, cplx* u, cplx* v,
                 std::size_t count) {
  const double ar = a.real(), ai = a.imag();
  const double br = b.real(), bi = b.imag();
  const double cr = c.real(), ci = c.imag();
  const double dr = d.real(), di = d.imag();
  for (std::size_t i = 0; i < count; ++i) {
    const double ur = u[i].real(), ui = u[i].imag();
    const double vr = v[i].real(), vi = v[i].imag();
    u[i] = cplx(ar * ur - ai * ui + br * vr - bi * vi,
                ar * ui + ai * ur + br * vi + bi * vr);
    v[i] = cplx(cr * ur - ci * ui + dr * vr - di * vi,
                cr * ui + ci * ur + dr * vi + di * vr);
  }
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops ops{&axpy_scalar, &scal_scalar, &cdotc_scalar, &rot2_scalar,
                       "scalar"};
  return ops;
}

}  // namespace robustkit::kernels
