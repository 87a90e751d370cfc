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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <vector>

#include "robustkit/kernels.hpp"
#include "robustkit/rng.hpp"

using robustkit::Rng;
using robustkit::kernels::Ops;
using robustkit::kernels::active;
using robustkit::kernels::avx2_ops;
using robustkit::kernels::scalar_ops;

namespace {

using cplx = std::complex<double>;

std::vector<cplx> random_vec(Rng& rng, std::size_t n) {
  std::vector<cplx> v(n);
  for (cplx& z : v) z = rng.complex_normal();
  return v;
}

double max_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace

TEST_CASE("scalar axpy and scal basics") {
  const Ops& ops = scalar_ops();
  std::vector<cplx> x{{1.0, 2.0}, {0.0, -1.0}};
  std::vector<cplx> y{{0.5, 0.0}, {1.0, 1.0}};
  ops.axpy(cplx(0.0, 1.0), x.data(), y.data(), 2);  // y += i*x
  CHECK(std::abs(y[0] - cplx(-1.5, 1.0)) < 1e-15);
  CHECK(std::abs(y[1] - cplx(2.0, 1.0)) < 1e-15);

  ops.scal(cplx(2.0, 0.0), y.data(), 2);
  CHECK(std::abs(y[0] - cplx(-3.0, 2.0)) < 1e-15);
}

TEST_CASE("scalar cdotc conjugates the left argument") {
  const Ops& ops = scalar_ops();
  std::vector<cplx> x{{0.0, 1.0}};
  std::vector<cplx> y{{0.0, 1.0}};
  const cplx d = ops.cdotc(x.data(), y.data(), 1);
  CHECK(std::abs(d - cplx(1.0, 0.0)) < 1e-15);
}

TEST_CASE("rot2 agrees with explicit 2x2 complex combination") {
  const Ops& ops = scalar_ops();
  Rng rng(7);
  std::vector<cplx> u = random_vec(rng, 5);
  std::vector<cplx> v = random_vec(rng, 5);
  const cplx a = rng.complex_normal(), b = rng.complex_normal();
  const cplx c = rng.complex_normal(), d = rng.complex_normal();
  std::vector<cplx> eu(5), ev(5);
  for (int i = 0; i < 5; ++i) {
    eu[i] = a * u[i] + b * v[i];
    ev[i] = c * u[i] + d * v[i];
  }
  ops.rot2(a, b, c, d, u.data(), v.data(), 5);
  CHECK(max_diff(u, eu) < 1e-14);
  CHECK(max_diff(v, ev) < 1e-14);
}

TEST_CASE("avx2 kernels match the scalar reference") {
  const Ops* simd = avx2_ops();
  if (simd == nullptr) {
    MESSAGE("AVX2 unavailable; dispatch falls back to scalar");
    CHECK(std::string(active().name) == "scalar");
    return;
  }
  const Ops& ref = scalar_ops();
  Rng rng(20260808);
  // Odd lengths exercise the vector tails.
  for (std::size_t n : {1u, 2u, 3u, 7u, 16u, 33u, 64u, 127u}) {
    const std::vector<cplx> x = random_vec(rng, n);
    const cplx a = rng.complex_normal();

    std::vector<cplx> y1 = random_vec(rng, n);
    std::vector<cplx> y2 = y1;
    ref.axpy(a, x.data(), y1.data(), n);
    simd->axpy(a, x.data(), y2.data(), n);
    CHECK(max_diff(y1, y2) < 1e-13);

    std::vector<cplx> s1 = x, s2 = x;
    ref.scal(a, s1.data(), n);
    simd->scal(a, s2.data(), n);
    CHECK(max_diff(s1, s2) < 1e-13);

    const cplx d1 = ref.cdotc(x.data(), y1.data(), n);
    const cplx d2 = simd->cdotc(x.data(), y1.data(), n);
    CHECK(std::abs(d1 - d2) < 1e-12 * (1.0 + std::abs(d1)));

    std::vector<cplx> u1 = random_vec(rng, n), v1 = random_vec(rng, n);
    std::vector<cplx> u2 = u1, v2 = v1;
    const cplx b = rng.complex_normal(), c = rng.complex_normal(),
               d = rng.complex_normal();
    ref.rot2(a, b, c, d, u1.data(), v1.data(), n);
    simd->rot2(a, b, c, d, u2.data(), v2.data(), n);
    CHECK(max_diff(u1, u2) < 1e-13);
    CHECK(max_diff(v1, v2) < 1e-13);
  }
}

TEST_CASE("active dispatch returns a usable kernel set") {
  const Ops& ops = active();
  CHECK(ops.axpy != nullptr);
  CHECK(ops.scal != nullptr);
  CHECK(ops.cdotc != nullptr);
  CHECK(ops.rot2 != nullptr);
  // On this build the name is one of the known sets.
  const std::string name = ops.name;
  CHECK((name == "scalar" || name == "avx2"));
}
