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

#include "robustkit/matrix.hpp"

#include <cmath>

#include "robustkit/kernels.hpp"

namespace robustkit {

ComplexMatrix ComplexMatrix::dagger() const {
  ComplexMatrix out(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

ComplexMatrix ComplexMatrix::conj() const {
  ComplexMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    out.data_[i] = std::conj(data_[i]);
  return out;
}

cplx ComplexMatrix::trace() const {
  if (!square()) throw validation_error("trace: matrix not square");
  cplx t = 0.0;
  for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  const cplx s = kernels::active().cdotc(data_.data(), data_.data(),
                                         data_.size());
  return std::sqrt(s.real());
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const cplx& z : data_) m = std::max(m, std::abs(z));
  return m;
}

bool ComplexMatrix::all_finite() const {
  for (const cplx& z : data_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

double ComplexMatrix::hermiticity_error() const {
  if (!square()) throw validation_error("hermiticity_error: not square");
  double worst = 0.0;
  for (int r = 0; r < rows_; ++r)
    for (int c = r; c < cols_; ++c)
      worst = std::max(worst,
                       std::abs((*this)(r, c) - std::conj((*this)(c, r))));
  return worst;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw validation_error("matrix add: dimension mismatch");
  kernels::active().axpy(1.0, other.data_.data(), data_.data(), data_.size());
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw validation_error("matrix sub: dimension mismatch");
  kernels::active().axpy(-1.0, other.data_.data(), data_.data(), data_.size());
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx factor) {
  kernels::active().scal(factor, data_.data(), data_.size());
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
  a += b;
  return a;
}

ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
  a -= b;
  return a;
}

ComplexMatrix operator*(cplx factor, ComplexMatrix m) {
  m *= factor;
  return m;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows())
    throw validation_error("matrix multiply: dimension mismatch");
  ComplexMatrix c(a.rows(), b.cols());
  const auto& k = kernels::active();
  for (int i = 0; i < a.rows(); ++i) {
    cplx* ci = c.row(i);
    for (int l = 0; l < a.cols(); ++l) {
      const cplx ail = a(i, l);
      if (ail.real() != 0.0 || ail.imag() != 0.0)
        k.axpy(ail, b.row(l), ci, static_cast<std::size_t>(b.cols()));
    }
  }
  return c;
}

ComplexMatrix linear_combination(cplx alpha, const ComplexMatrix& a, cplx beta,
                                 const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw validation_error("linear_combination: dimension mismatch");
  ComplexMatrix out = a;
  const auto& k = kernels::active();
  k.scal(alpha, out.data(), out.size());
  k.axpy(beta, b.data(), out.data(), out.size());
  return out;
}

ComplexMatrix hermitize(const ComplexMatrix& m) {
  if (!m.square()) throw validation_error("hermitize: matrix not square");
  ComplexMatrix out(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r) {
    out(r, r) = cplx(m(r, r).real(), 0.0);
    for (int c = r + 1; c < m.cols(); ++c) {
      const cplx v = 0.5 * (m(r, c) + std::conj(m(c, r)));
      out(r, c) = v;
      out(c, r) = std::conj(v);
    }
  }
  return out;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b,
                     std::size_t max_entries) {
  if (!a.all_finite() || !b.all_finite())
    throw validation_error("tensor: non-finite entries");
  const std::size_t entries = static_cast<std::size_t>(a.rows()) * b.rows() *
                              a.cols() * b.cols();
  if (entries > max_entries)
    throw validation_error("tensor: result exceeds configured maximum size");
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int ar = 0; ar < a.rows(); ++ar)
    for (int ac = 0; ac < a.cols(); ++ac) {
      const cplx f = a(ar, ac);
      if (f.real() == 0.0 && f.imag() == 0.0) continue;
      for (int br = 0; br < b.rows(); ++br)
        for (int bc = 0; bc < b.cols(); ++bc)
          out(ar * b.rows() + br, ac * b.cols() + bc) = f * b(br, bc);
    }
  return out;
}

std::vector<cplx> matvec(const ComplexMatrix& m, const std::vector<cplx>& x) {
  if (static_cast<std::size_t>(m.cols()) != x.size())
    throw validation_error("matvec: dimension mismatch");
  std::vector<cplx> y(m.rows(), cplx(0.0, 0.0));
  for (int r = 0; r < m.rows(); ++r) {
    const cplx* mr = m.row(r);
    cplx acc = 0.0;
    for (int c = 0; c < m.cols(); ++c) acc += mr[c] * x[c];
    y[r] = acc;
  }
  return y;
}

cplx quadratic_form(const ComplexMatrix& m, const std::vector<cplx>& x) {
  const std::vector<cplx> mx = matvec(m, x);
  return kernels::active().cdotc(x.data(), mx.data(), x.size());
}

double max_entry_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw validation_error("max_entry_diff: dimension mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
  return worst;
}

}  // namespace robustkit
