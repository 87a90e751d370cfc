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

#ifndef ROBUSTKIT_MATRIX_HPP
#define ROBUSTKIT_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include "robustkit/errors.hpp"

namespace robustkit {

using cplx = std::complex<double>;

/// Dense row-major complex matrix; the universal carrier for states and
/// operators. Values are immutable in spirit: operations return new
/// matrices, element writes are for construction.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(int rows, int cols)
      : rows_(rows), cols_(cols),
        data_(static_cast<std::size_t>(rows) * cols, cplx(0.0, 0.0)) {
    if (rows < 1 || cols < 1)
      throw validation_error("ComplexMatrix: dimensions must be positive");
  }

  static ComplexMatrix identity(int n) {
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  cplx& operator()(int r, int c) {
    return data_[static_cast<std::size_t>(r) * cols_ + c];
  }
  const cplx& operator()(int r, int c) const {
    return data_[static_cast<std::size_t>(r) * cols_ + c];
  }

  cplx* row(int r) { return data_.data() + static_cast<std::size_t>(r) * cols_; }
  const cplx* row(int r) const {
    return data_.data() + static_cast<std::size_t>(r) * cols_;
  }
  cplx* data() { return data_.data(); }
  const cplx* data() const { return data_.data(); }
  std::size_t size() const { return data_.size(); }

  ComplexMatrix dagger() const;
  ComplexMatrix conj() const;
  cplx trace() const;
  double frobenius_norm() const;
  double max_abs() const;
  bool all_finite() const;
  /// max_ij |M_ij - conj(M_ji)|
  double hermiticity_error() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(cplx factor);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<cplx> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx factor, ComplexMatrix m);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

/// alpha*A + beta*B
ComplexMatrix linear_combination(cplx alpha, const ComplexMatrix& a, cplx beta,
                                 const ComplexMatrix& b);

/// (M + M^dagger)/2; exactly Hermitian entrywise.
ComplexMatrix hermitize(const ComplexMatrix& m);

/// Kronecker product. Result block (i,j) equals A(i,j)*B. Throws when the
/// result would exceed max_entries (desk-scale guard, default 4096 = 64x64).
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b,
                     std::size_t max_entries = 4096);

std::vector<cplx> matvec(const ComplexMatrix& m, const std::vector<cplx>& x);

/// <x| M |x>
cplx quadratic_form(const ComplexMatrix& m, const std::vector<cplx>& x);

double max_entry_diff(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace robustkit

#endif  // ROBUSTKIT_MATRIX_HPP
