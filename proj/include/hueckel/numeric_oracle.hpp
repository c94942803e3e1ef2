// Copyright 2026 The Hueckel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hueckel/exact_matrix.hpp"

namespace hueckel {

/// Dense row-major double matrix; entries must be finite.
class FloatMatrix {
 public:
  FloatMatrix() = default;
  FloatMatrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  FloatMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

  static FloatMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  double operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  std::span<const double> entries() const noexcept { return entries_; }
  std::span<double> entries() noexcept { return entries_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> entries_;
};

FloatMatrix to_float(const ExactMatrix& m);

FloatMatrix multiply(const FloatMatrix& lhs, const FloatMatrix& rhs);

/// Induced infinity norm (max absolute row sum).
double inf_norm(const FloatMatrix& m);

/// max_ij |a_ij - b_ij|
double max_abs_diff(const FloatMatrix& a, const FloatMatrix& b);

/// LU with partial pivoting. Throws NumericallySingularError when a pivot is
/// zero (relative to the largest entry) or the 1-norm condition estimate
/// exceeds 1e12.
FloatMatrix lu_inverse(const FloatMatrix& m);

/// Determinant from the pivoted LU; 0.0 when a pivot vanishes.
double det_float(const FloatMatrix& m);

/// All eigenvalues of a symmetric matrix, ascending. Throws NotSymmetric if
/// |a_ij - a_ji| > 1e-12 anywhere.
std::vector<double> symmetric_eigenvalues(const FloatMatrix& m);

/// 17 significant digits; fixed notation for decimal exponents in [-5, 17),
/// scientific otherwise. 1.0 renders as "1.0000000000000000".
std::string format_real(double value);

}  // namespace hueckel
