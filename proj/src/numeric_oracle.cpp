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

#include "hueckel/numeric_oracle.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <numeric>

#include "hueckel/error.hpp"

namespace hueckel {

namespace {

constexpr double kConditionLimit = 1e12;
constexpr double kSymmetryTolerance = 1e-12;

void require_square(const FloatMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::InvalidArgument, "matrix must be square");
}

double one_norm(const FloatMatrix& m) {
  double best = 0.0;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    double col = 0.0;
    for (std::size_t r = 0; r < m.rows(); ++r) col += std::fabs(m(r, c));
    best = std::max(best, col);
  }
  return best;
}

// Packed LU factors of P A; `singular_at` is the first vanishing pivot
// (0-based) or -1.
struct LuFactors {
  FloatMatrix lu;
  std::vector<std::size_t> perm;
  int sign = 1;
  int singular_at = -1;
  std::size_t weakest_pivot = 0;
};

LuFactors factor(const FloatMatrix& m) {
  require_square(m);
  const std::size_t n = m.rows();
  LuFactors f{m, std::vector<std::size_t>(n), 1, -1, 0};
  std::iota(f.perm.begin(), f.perm.end(), std::size_t{0});
  double scale = 0.0;
  for (double v : m.entries()) scale = std::max(scale, std::fabs(v));
  const double tiny = std::max<double>(1, n) * std::numeric_limits<double>::epsilon() * scale;
  double weakest = std::numeric_limits<double>::infinity();

  FloatMatrix& a = f.lu;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::fabs(a(i, k)) > std::fabs(a(p, k))) p = i;
    }
    if (std::fabs(a(p, k)) <= tiny || scale == 0.0) {
      f.singular_at = static_cast<int>(k);
      return f;
    }
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      std::swap(f.perm[k], f.perm[p]);
      f.sign = -f.sign;
    }
    if (std::fabs(a(k, k)) < weakest) {
      weakest = std::fabs(a(k, k));
      f.weakest_pivot = k;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const double l = a(i, k) / a(k, k);
      a(i, k) = l;
      if (l == 0.0) continue;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= l * a(k, j);
    }
  }
  return f;
}

}  // namespace

FloatMatrix::FloatMatrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), entries_(rows * cols, fill) {}

FloatMatrix::FloatMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) throw Error(ErrorCode::InvalidArgument, "entry count mismatch");
  for (double v : entries_) {
    if (!std::isfinite(v)) throw Error(ErrorCode::InvalidArgument, "non-finite entry");
  }
}

FloatMatrix FloatMatrix::identity(std::size_t n) {
  FloatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

FloatMatrix to_float(const ExactMatrix& m) {
  FloatMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).get_d();
  }
  return out;
}

FloatMatrix multiply(const FloatMatrix& lhs, const FloatMatrix& rhs) {
  if (lhs.cols() != rhs.rows()) throw Error(ErrorCode::InvalidArgument, "matrix product shape mismatch");
  FloatMatrix out(lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      const double a = lhs(i, k);
      if (a == 0.0) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

double inf_norm(const FloatMatrix& m) {
  double best = 0.0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    double row = 0.0;
    for (std::size_t c = 0; c < m.cols(); ++c) row += std::fabs(m(r, c));
    best = std::max(best, row);
  }
  return best;
}

double max_abs_diff(const FloatMatrix& a, const FloatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::InvalidArgument, "shape mismatch");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    worst = std::max(worst, std::fabs(a.entries()[i] - b.entries()[i]));
  }
  return worst;
}

FloatMatrix lu_inverse(const FloatMatrix& m) {
  const LuFactors f = factor(m);
  if (f.singular_at >= 0) throw NumericallySingularError(f.singular_at + 1);
  const std::size_t n = m.rows();
  FloatMatrix inv(n, n);
  std::vector<double> x(n);
  for (std::size_t col = 0; col < n; ++col) {
    for (std::size_t i = 0; i < n; ++i) x[i] = f.perm[i] == col ? 1.0 : 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < i; ++j) x[i] -= f.lu(i, j) * x[j];
    }
    for (std::size_t i = n; i-- > 0;) {
      for (std::size_t j = i + 1; j < n; ++j) x[i] -= f.lu(i, j) * x[j];
      x[i] /= f.lu(i, i);
    }
    for (std::size_t i = 0; i < n; ++i) inv(i, col) = x[i];
  }
  if (one_norm(m) * one_norm(inv) > kConditionLimit) {
    throw NumericallySingularError(static_cast<int>(f.weakest_pivot) + 1);
  }
  return inv;
}

double det_float(const FloatMatrix& m) {
  const LuFactors f = factor(m);
  if (f.singular_at >= 0) return 0.0;
  double det = f.sign;
  for (std::size_t i = 0; i < m.rows(); ++i) det *= f.lu(i, i);
  return det;
}

std::vector<double> symmetric_eigenvalues(const FloatMatrix& m) {
  require_square(m);
  const auto n = static_cast<Eigen::Index>(m.rows());
  Eigen::MatrixXd a(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      if (std::fabs(m(r, c) - m(c, r)) > kSymmetryTolerance) {
        throw Error(ErrorCode::NotSymmetric, "matrix is not symmetric");
      }
      a(r, c) = m(r, c);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::IdentityViolation, "eigensolver did not converge");
  }
  const Eigen::VectorXd& values = solver.eigenvalues();
  std::vector<double> out(values.data(), values.data() + values.size());
  std::sort(out.begin(), out.end());
  return out;
}

std::string format_real(double value) {
  if (value == 0.0) value = 0.0;  // drop the sign of negative zero
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.16e", value);
  const int exponent = std::atoi(std::strchr(buf, 'e') + 1);
  if (exponent < -5 || exponent >= 17) return buf;
  std::snprintf(buf, sizeof buf, "%.*f", 16 - exponent, value);
  return buf;
}

}  // namespace hueckel
