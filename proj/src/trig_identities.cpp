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

#include "hueckel/trig_identities.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hueckel/error.hpp"

namespace hueckel {

namespace {

constexpr double kSingularAngle = 1e-12;
constexpr double kRatioTolerance = 1e-9;

void require_even(int n) {
  if (n < 2 || n % 2 != 0) throw Error(ErrorCode::SingularMatrix, "N odd");
}

double half_angle_sine(double theta) {
  const double s = std::sin(theta / 2.0);
  if (std::fabs(s) <= kSingularAngle) {
    throw Error(ErrorCode::NearSingularAngle, "sin(theta/2) vanishes");
  }
  return s;
}

void require_terms(int nprime) {
  if (nprime < 0) throw Error(ErrorCode::InvalidArgument, "N' must be non-negative");
}

}  // namespace

double direct_green_sum(int n, int r, int s) {
  require_even(n);
  if (r < 1 || r > n || s < 1 || s > n) {
    throw Error(ErrorCode::IndexOutOfRange, "site outside 1..N");
  }
  const double omega = std::numbers::pi / (n + 1);
  CompensatedSum sum;
  for (int k = 1; k <= n; ++k) {
    sum += std::sin(static_cast<double>(r) * k * omega) *
           std::sin(static_cast<double>(s) * k * omega) / std::cos(k * omega);
  }
  return -sum.value() / (n + 1);
}

double sum_cos(int nprime, double theta) {
  require_terms(nprime);
  const double denominator = half_angle_sine(theta);
  return std::cos(nprime * theta / 2.0) * std::sin((nprime + 1) * theta / 2.0) / denominator;
}

double sum_sin(int nprime, double theta) {
  require_terms(nprime);
  const double denominator = half_angle_sine(theta);
  return std::sin(nprime * theta / 2.0) * std::sin((nprime + 1) * theta / 2.0) / denominator;
}

int sine_ratio_sign(int n, int k) {
  if (n < 2 || n % 2 != 0) throw Error(ErrorCode::InvalidArgument, "N must be even");
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be positive");
  if (k % (n + 1) == 0) throw Error(ErrorCode::DegenerateAngle, "k is a multiple of N+1");
  const int sign = k % 2 == 0 ? -1 : 1;
  const double angle = std::numbers::pi * k / (n + 1);
  const double ratio = std::sin(n * angle) / std::sin(angle);
  if (std::fabs(ratio - sign) > kRatioTolerance) {
    throw Error(ErrorCode::IdentityViolation,
                "sine ratio " + std::to_string(ratio) + " for N=" + std::to_string(n) +
                    ", k=" + std::to_string(k));
  }
  return sign;
}

double parity_zero_sum(int n, int q) {
  if (n < 2 || n % 2 != 0) throw Error(ErrorCode::InvalidArgument, "N must be even");
  if (q < 1 || 2 * q > n) throw Error(ErrorCode::InvalidArgument, "need 1 <= 2q <= N");
  const double omega = std::numbers::pi / (n + 1);
  auto term = [&](int k) {
    return std::cos(2.0 * q * k * omega) / std::cos(k * omega);
  };
  CompensatedSum sum;
  for (int k = 1; k <= n / 2; ++k) {
    // Numerators agree, denominators differ in sign.
    sum += term(k) + term(n + 1 - k);
  }
  return sum.value();
}

}  // namespace hueckel
