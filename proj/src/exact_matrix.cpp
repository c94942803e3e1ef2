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

#include "hueckel/exact_matrix.hpp"

#include <utility>

#include "hueckel/error.hpp"

namespace hueckel {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool ExactMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = r + 1; c < cols_; ++c) {
      if ((*this)(r, c) != (*this)(c, r)) return false;
    }
  }
  return true;
}

ExactMatrix ExactMatrix::operator-() const {
  ExactMatrix out = *this;
  for (auto& e : out.entries_) e = -e;
  return out;
}

ExactMatrix multiply(const ExactMatrix& lhs, const ExactMatrix& rhs) {
  if (lhs.cols() != rhs.rows()) {
    throw Error(ErrorCode::InvalidArgument, "matrix product shape mismatch");
  }
  ExactMatrix out(lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      const Rational& a = lhs(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j) {
        if (sgn(rhs(k, j)) != 0) out(i, j) += a * rhs(k, j);
      }
    }
  }
  return out;
}

std::vector<Rational> multiply(const ExactMatrix& lhs,
                               std::span<const Rational> vec) {
  if (lhs.cols() != vec.size()) {
    throw Error(ErrorCode::InvalidArgument, "matrix-vector shape mismatch");
  }
  std::vector<Rational> out(lhs.rows());
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      if (sgn(lhs(i, k)) != 0) out[i] += lhs(i, k) * vec[k];
    }
  }
  return out;
}

Rational bareiss_determinant(const ExactMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::InvalidArgument, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;

  Integer scale = 1;
  for (const auto& e : m.entries()) {
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), e.get_den_mpz_t());
  }
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& e = m(i, j);
      a[i][j] = e.get_num() * (scale / e.get_den());
    }
  }

  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }

  Integer scale_n;
  mpz_pow_ui(scale_n.get_mpz_t(), scale.get_mpz_t(), static_cast<unsigned long>(n));
  Rational det(a[n - 1][n - 1] * sign, scale_n);
  det.canonicalize();
  return det;
}

ExactMatrix exact_inverse(const ExactMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::InvalidArgument, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  const std::size_t w = 2 * n;
  std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(w));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m(i, j);
    aug[i][n + i] = 1;
  }

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && sgn(aug[p][k]) == 0) ++p;
    if (p == n) throw Error(ErrorCode::SingularMatrix, "no pivot in column " + std::to_string(k + 1));
    std::swap(aug[k], aug[p]);

    const Rational inv_pivot = Rational(1) / aug[k][k];
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < w; ++j) {
      if (sgn(aug[k][j]) != 0) {
        aug[k][j] *= inv_pivot;
        support.push_back(j);
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || sgn(aug[i][k]) == 0) continue;
      const Rational f = aug[i][k];
      for (std::size_t j : support) aug[i][j] -= f * aug[k][j];
    }
  }

  ExactMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = std::move(aug[i][n + j]);
  }
  return out;
}

}  // namespace hueckel
