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

#include "robustkit/svd.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace robustkit {

namespace {

constexpr int kMaxSweeps = 60;
constexpr double kOrthTol = 1e-15;

struct ColumnDots {
  double app;
  double aqq;
  cplx apq;
};

ColumnDots column_dots(const ComplexMatrix& a, int p, int q) {
  ColumnDots d{0.0, 0.0, cplx(0.0, 0.0)};
  for (int i = 0; i < a.rows(); ++i) {
    d.app += std::norm(a(i, p));
    d.aqq += std::norm(a(i, q));
    d.apq += std::conj(a(i, p)) * a(i, q);
  }
  return d;
}

void rotate_columns(ComplexMatrix& m, int p, int q, cplx alpha, double sn,
                    double cs, cplx beta) {
  for (int i = 0; i < m.rows(); ++i) {
    const cplx mp = m(i, p), mq = m(i, q);
    m(i, p) = alpha * mp - sn * mq;
    m(i, q) = beta * mp + cs * mq;
  }
}

// Lexicographic comparison of U columns on (re, im) entry pairs; used only
// to order columns whose singular values tie.
bool column_less(const ComplexMatrix& u, int a, int b) {
  for (int i = 0; i < u.rows(); ++i) {
    const cplx x = u(i, a), y = u(i, b);
    if (x.real() != y.real()) return x.real() < y.real();
    if (x.imag() != y.imag()) return x.imag() < y.imag();
  }
  return false;
}

}  // namespace

Svd svd_jacobi(const ComplexMatrix& a0) {
  if (!a0.square()) throw validation_error("svd_jacobi: matrix not square");
  if (!a0.all_finite())
    throw validation_error("svd_jacobi: non-finite entries");
  const int n = a0.rows();
  ComplexMatrix a = a0;
  ComplexMatrix v = ComplexMatrix::identity(n);

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool converged = true;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const ColumnDots d = column_dots(a, p, q);
        const double scale = std::sqrt(d.app * d.aqq);
        if (scale == 0.0) continue;
        const double r = std::abs(d.apq);
        if (r <= kOrthTol * scale) continue;
        converged = false;

        const cplx phase = d.apq / r;
        const double tau = (d.aqq - d.app) / (2.0 * r);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double cs = 1.0 / std::sqrt(1.0 + t * t);
        const double sn = t * cs;
        const cplx alpha = phase * cs;
        const cplx beta = phase * sn;

        rotate_columns(a, p, q, alpha, sn, cs, beta);
        rotate_columns(v, p, q, alpha, sn, cs, beta);
      }
    }
    if (converged) break;
  }

  // Singular values are the column norms.
  std::vector<double> sigma(n);
  for (int p = 0; p < n; ++p) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += std::norm(a(i, p));
    sigma[p] = std::sqrt(s);
  }
  const double sig_max = *std::max_element(sigma.begin(), sigma.end());
  const double rank_tol = std::max(1e-300, 1e-14 * std::max(sig_max, 1.0));

  ComplexMatrix u(n, n);
  std::vector<bool> filled(n, false);
  for (int p = 0; p < n; ++p) {
    if (sigma[p] <= rank_tol) continue;
    for (int i = 0; i < n; ++i) u(i, p) = a(i, p) / sigma[p];
    filled[p] = true;
  }

  // Complete U to a unitary on null columns via Gram-Schmidt over the
  // natural basis (deterministic).
  for (int p = 0; p < n; ++p) {
    if (filled[p]) continue;
    sigma[p] = 0.0;
    for (int e = 0; e < n; ++e) {
      std::vector<cplx> cand(n, cplx(0.0, 0.0));
      cand[e] = 1.0;
      for (int pass = 0; pass < 2; ++pass) {
        for (int c = 0; c < n; ++c) {
          if (c == p || !filled[c]) continue;
          cplx overlap = 0.0;
          for (int i = 0; i < n; ++i) overlap += std::conj(u(i, c)) * cand[i];
          for (int i = 0; i < n; ++i) cand[i] -= overlap * u(i, c);
        }
      }
      double nn = 0.0;
      for (int i = 0; i < n; ++i) nn += std::norm(cand[i]);
      nn = std::sqrt(nn);
      if (nn > 0.5) {
        for (int i = 0; i < n; ++i) u(i, p) = cand[i] / nn;
        filled[p] = true;
        break;
      }
    }
    if (!filled[p])
      throw numeric_error("svd_jacobi: failed to complete unitary basis");
  }

  // Phase convention: largest-modulus entry of each U column real positive,
  // compensated in the matching V column.
  for (int p = 0; p < n; ++p) {
    int arg_max = 0;
    double best = -1.0;
    for (int i = 0; i < n; ++i) {
      const double m = std::abs(u(i, p));
      if (m > best + 1e-15) {
        best = m;
        arg_max = i;
      }
    }
    const cplx pivot = u(arg_max, p);
    if (std::abs(pivot) > 0.0) {
      const cplx ph = pivot / std::abs(pivot);
      const cplx inv = std::conj(ph);
      for (int i = 0; i < n; ++i) {
        u(i, p) *= inv;
        v(i, p) *= inv;
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
    if (std::abs(sigma[i] - sigma[j]) > 1e-12) return sigma[i] > sigma[j];
    return column_less(u, i, j);
  });

  Svd out;
  out.singular_values.resize(n);
  out.u = ComplexMatrix(n, n);
  out.v = ComplexMatrix(n, n);
  for (int p = 0; p < n; ++p) {
    out.singular_values[p] = sigma[order[p]];
    for (int i = 0; i < n; ++i) {
      out.u(i, p) = u(i, order[p]);
      out.v(i, p) = v(i, order[p]);
    }
  }
  return out;
}

}  // namespace robustkit
