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

// AVX2+FMA variants. Complex doubles are interleaved [re im re im], two per
// 256-bit register. This TU is compiled with -mavx2 -mfma on x86; selection
// still goes through a runtime CPU check in avx2_ops().

#if defined(__AVX2__) && defined(__FMA__)
#include <immintrin.h>
#endif

namespace robustkit::kernels {

#if defined(__AVX2__) && defined(__FMA__)

namespace {

// a*x for two interleaved complex doubles, with the factor a pre-broadcast
// into ar = [re re re re] and ai = [im im im im].
inline __m256d cmul_bcast(__m256d ar, __m256d ai, __m256d x) {
  const __m256d xswap = _mm256_permute_pd(x, 0x5);  // [im re im re]
  return _mm256_fmaddsub_pd(ar, x, _mm256_mul_pd(ai, xswap));
}

void axpy_avx2(cplx a, const cplx* x, cplx* y, std::size_t count) {
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  const double* xp = reinterpret_cast<const double*>(x);
  double* yp = reinterpret_cast<double*>(y);
  std::size_t i = 0;
  for (; i + 2 <= count; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xp + 2 * i);
    const __m256d yv = _mm256_loadu_pd(yp + 2 * i);
    _mm256_storeu_pd(yp + 2 * i, _mm256_add_pd(yv, cmul_bcast(ar, ai, xv)));
  }
  for (; i < count; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    y[i] += cplx(a.real() * xr - a.imag() * xi, a.real() * xi + a.imag() * xr);
  }
}

void scal_avx2(cplx a, cplx* x, std::size_t count) {
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  double* xp = reinterpret_cast<double*>(x);
  std::size_t i = 0;
  for (; i + 2 <= count; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xp + 2 * i);
    _mm256_storeu_pd(xp + 2 * i, cmul_bcast(ar, ai, xv));
  }
  for (; i < count; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    x[i] = cplx(a.real() * xr - a.imag() * xi, a.real() * xi + a.imag() * xr);
  }
}

cplx cdotc_avx2(const cplx* x, const cplx* y, std::size_t count) {
  const double* xp = reinterpret_cast<const double*>(x);
  const double* yp = reinterpret_cast<const double*>(y);
  // acc_rr lanes hold xr*yr (even) and xi*yi (odd): their total is Re.
  // acc_ri lanes hold xi*yr (even) and xr*yi (odd): Im = odd - even.
  __m256d acc_rr = _mm256_setzero_pd();
  __m256d acc_ri = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= count; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xp + 2 * i);
    const __m256d yv = _mm256_loadu_pd(yp + 2 * i);
    acc_rr = _mm256_fmadd_pd(xv, yv, acc_rr);
    acc_ri = _mm256_fmadd_pd(_mm256_permute_pd(xv, 0x5), yv, acc_ri);
  }
  alignas(32) double rr[4], ri[4];
  _mm256_store_pd(rr, acc_rr);
  _mm256_store_pd(ri, acc_ri);
  double re = rr[0] + rr[1] + rr[2] + rr[3];
  double im = (ri[1] + ri[3]) - (ri[0] + ri[2]);
  for (; i < count; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    const double yr = y[i].real(), yi = y[i].imag();
    re += xr * yr + xi * yi;
    im += xr * yi - xi * yr;
  }
  return {re, im};
}

void rot2_avx2(cplx a, cplx b, cplx c, cplx d, cplx* u, cplx* v,
               std::size_t count) {
  const __m256d ar = _mm256_set1_pd(a.real()), ai = _mm256_set1_pd(a.imag());
  const __m256d br = _mm256_set1_pd(b.real()), bi = _mm256_set1_pd(b.imag());
  const __m256d cr = _mm256_set1_pd(c.real()), ci = _mm256_set1_pd(c.imag());
  const __m256d dr = _mm256_set1_pd(d.real()), di = _mm256_set1_pd(d.imag());
  double* up = reinterpret_cast<double*>(u);
  double* vp = reinterpret_cast<double*>(v);
  std::size_t i = 0;
  for (; i + 2 <= count; i += 2) {
    const __m256d uv = _mm256_loadu_pd(up + 2 * i);
    const __m256d vv = _mm256_loadu_pd(vp + 2 * i);
    const __m256d nu =
        _mm256_add_pd(cmul_bcast(ar, ai, uv), cmul_bcast(br, bi, vv));
    const __m256d nv =
        _mm256_add_pd(cmul_bcast(cr, ci, uv), cmul_bcast(dr, di, vv));
    _mm256_storeu_pd(up + 2 * i, nu);
    _mm256_storeu_pd(vp + 2 * i, nv);
  }
  for (; i < count; ++i) {
    const cplx ui = u[i], vi = v[i];
    u[i] = a * ui + b * vi;
    v[i] = c * ui + d * vi;
  }
}

}  // namespace

const Ops* avx2_ops() {
  static const bool supported =
      __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  if (!supported) return nullptr;
  static const Ops ops{&axpy_avx2, &scal_avx2, &cdotc_avx2, &rot2_avx2,
                       "avx2"};
  return &ops;
}

#else

const Ops* avx2_ops() { return nullptr; }

#endif  // __AVX2__ && __FMA__

}  // namespace robustkit::kernels
