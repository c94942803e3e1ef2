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
#include <vector>

#include "hueckel/rational.hpp"

namespace hueckel {

/// Dense row-major matrix of exact rationals. Storage indices are 0-based;
/// the domain modules translate the 1-based site indices of their public
/// interfaces before touching entries.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);

  static ExactMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  std::span<const Rational> entries() const noexcept { return entries_; }
  std::span<Rational> entries() noexcept { return entries_; }

  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_symmetric() const;

  ExactMatrix operator-() const;
  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// Product; zero entries of the left factor are skipped, so banded left
/// operands cost O(nnz * cols).
ExactMatrix multiply(const ExactMatrix& lhs, const ExactMatrix& rhs);

std::vector<Rational> multiply(const ExactMatrix& lhs,
                               std::span<const Rational> vec);

/// Determinant by fraction-free (Bareiss) elimination on the integer matrix
/// obtained by clearing all denominators with their common multiple.
Rational bareiss_determinant(const ExactMatrix& m);

/// Exact inverse by Gauss-Jordan elimination with zero-skipping row updates.
/// Throws Error(SingularMatrix) when no nonzero pivot exists.
ExactMatrix exact_inverse(const ExactMatrix& m);

}  // namespace hueckel
