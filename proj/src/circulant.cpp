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

#include "hueckel/circulant.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "hueckel/error.hpp"

namespace hueckel {

namespace {

void require_cycle(int n) {
  if (n < 3) throw Error(ErrorCode::CycleTooSmall, "cycle needs N >= 3");
}

// Gaussian integer a + b i.
struct Gaussian {
  std::int64_t re = 0;
  std::int64_t im = 0;

  Gaussian operator*(const Gaussian& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  Gaussian& operator+=(const Gaussian& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
};

// unit^k for unit = +i (sign = 1) or -i (sign = -1).
Gaussian i_power(int sign, int k) {
  static constexpr Gaussian kPowersOfI[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const int e = ((sign * k) % 4 + 4) % 4;
  return kPowersOfI[e];
}

// Solves m x = rhs exactly; returns false if m is singular.
bool exact_solve(ExactMatrix m, std::vector<Rational>& rhs) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && sgn(m(p, k)) == 0) ++p;
    if (p == n) return false;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      std::swap(rhs[k], rhs[p]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (sgn(m(i, k)) == 0) continue;
      const Rational f = m(i, k) / m(k, k);
      for (std::size_t j = k; j < n; ++j) {
        if (sgn(m(k, j)) != 0) m(i, j) -= f * m(k, j);
      }
      rhs[i] -= f * rhs[k];
    }
  }
  for (std::size_t k = n; k-- > 0;) {
    Rational acc = rhs[k];
    for (std::size_t j = k + 1; j < n; ++j) {
      if (sgn(m(k, j)) != 0) acc -= m(k, j) * rhs[j];
    }
    rhs[k] = acc / m(k, k);
  }
  return true;
}

}  // namespace

bool CirculantSpec::is_symmetric() const {
  const int n = size();
  for (int k = 1; k < n; ++k) {
    if (first_column[k] != first_column[n - k]) return false;
  }
  return true;
}

ExactMatrix to_matrix(const CirculantSpec& spec) {
  const int n = spec.size();
  ExactMatrix m(n, n);
  for (int r = 0; r < n; ++r) {
    for (int s = 0; s < n; ++s) m(r, s) = spec.first_column[((r - s) % n + n) % n];
  }
  return m;
}

CirculantSpec cyclic_inverse_first_column(int n) {
  require_cycle(n);
  // Each x_k is tracked as u_k + v_k x_0 until the closing row fixes x_0.
  std::vector<Rational> u(n), v(n);
  u[0] = 0;
  v[0] = 1;
  // Row 0 reads x_{N-1} + x_1 = 1; symmetry x_{N-1} = x_1 gives x_1 = 1/2.
  u[1] = Rational(1, 2);
  v[1] = 0;
  // Rows 1..N-2: x_{i-1} + x_{i+1} = 0.
  for (int i = 1; i + 1 <= n - 1; ++i) {
    u[i + 1] = -u[i - 1];
    v[i + 1] = -v[i - 1];
  }
  // Row N-1: x_{N-2} + x_0 = 0.
  const Rational coefficient = v[n - 2] + 1;
  if (sgn(coefficient) == 0) throw Error(ErrorCode::SingularMatrix, "N=4k");
  const Rational x0 = -u[n - 2] / coefficient;

  CirculantSpec out;
  out.first_column.resize(n);
  for (int k = 0; k < n; ++k) out.first_column[k] = u[k] + v[k] * x0;
  if (out.first_column[n - 1] + out.first_column[1] != 1) {
    throw Error(ErrorCode::IdentityViolation, "row 0 of H x = e_1 not satisfied");
  }
  return out;
}

CirculantSpec symbol_factorization_inverse(int n) {
  require_cycle(n);
  const Gaussian denominator =
      Gaussian{1 - i_power(1, n).re, -i_power(1, n).im} *
      Gaussian{1 - i_power(-1, n).re, -i_power(-1, n).im};
  if (denominator.re == 0 && denominator.im == 0) {
    throw Error(ErrorCode::SingularMatrix, "N=4k");
  }

  // Coefficient of S^m in (sum_j (-i)^j S^j)(sum_k i^k S^k) modulo S^N = I.
  std::vector<Gaussian> conv(n);
  for (int j = 0; j < n; ++j) {
    const Gaussian a = i_power(-1, j);
    for (int k = 0; k < n; ++k) conv[(j + k) % n] += a * i_power(1, k);
  }

  CirculantSpec out;
  out.first_column.resize(n);
  for (int k = 0; k < n; ++k) {
    // The leading S shifts coefficient m to S^{m+1}.
    const Gaussian c = conv[(k - 1 + n) % n];
    if (c.im != 0 || denominator.im != 0) {
      throw Error(ErrorCode::IdentityViolation, "non-real symbol coefficient");
    }
    out.first_column[k] = make_rational(static_cast<long>(c.re), static_cast<long>(denominator.re));
  }
  return out;
}

std::int64_t det_cyclic(int n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "cycle determinant needs N >= 2");
  if (n == 2) return -1;
  if (n % 2 == 1) return 2;
  return n % 4 == 0 ? 0 : -4;
}

std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>
cyclic_kernel_basis(int n) {
  if (n < 4 || n % 4 != 0) {
    throw Error(ErrorCode::NotSingular, "cycle of N=" + std::to_string(n) + " is invertible");
  }
  static constexpr std::int64_t kV1[4] = {0, -1, 0, 1};
  static constexpr std::int64_t kV2[4] = {1, 0, -1, 0};
  std::vector<std::int64_t> v1(n), v2(n);
  for (int i = 0; i < n; ++i) {
    v1[i] = kV1[i % 4];
    v2[i] = kV2[i % 4];
  }
  return {std::move(v1), std::move(v2)};
}

CirculantSpec circulant_inverse_dft(const CirculantSpec& spec) {
  const int n = spec.size();
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "empty circulant");

  // Float screen over the symbol; remembers the smallest value's index.
  int weakest = 0;
  double weakest_abs = INFINITY;
  for (int j = 0; j < n; ++j) {
    std::complex<double> symbol = 0.0;
    for (int k = 0; k < n; ++k) {
      const double phase = 2.0 * std::numbers::pi * static_cast<double>((static_cast<long>(j) * k) % n) / n;
      symbol += spec.first_column[k].get_d() * std::polar(1.0, phase);
    }
    if (std::abs(symbol) < weakest_abs) {
      weakest_abs = std::abs(symbol);
      weakest = j;
    }
  }

  std::vector<Rational> column(n);
  column[0] = 1;
  if (!exact_solve(to_matrix(spec), column)) throw CirculantSingularError(weakest);
  return CirculantSpec{std::move(column)};
}

}  // namespace hueckel
