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

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hueckel/rational.hpp"

namespace hueckel {

enum class ErrorCode {
  InvalidArgument,
  IndexOutOfRange,
  AlternatingOddN,
  CycleTooSmall,
  UnsupportedCouplings,
  ZeroCoupling,
  SingularMatrix,
  SingularLattice,
  NotSingular,
  EnergyAtPole,
  NumericallySingular,
  NotSymmetric,
  TooLarge,
  BudgetExhausted,
  NearSingularAngle,
  DegenerateAngle,
  MethodNotApplicable,
  IdentityViolation,
};

std::string_view error_code_name(ErrorCode code) noexcept;

/// Base exception for every failure raised by the library. The message is a
/// short machine-readable reason (e.g. "N=4k" for a singular 4k-cycle).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Singular tridiagonal matrix; carries the theta table for diagnostics.
class TridiagonalSingularError : public Error {
 public:
  TridiagonalSingularError(int n, std::vector<Rational> theta)
      : Error(ErrorCode::SingularMatrix, "theta_N = 0"),
        n_(n),
        theta_(std::move(theta)) {}

  int n() const noexcept { return n_; }
  /// theta_{-1} .. theta_N
  const std::vector<Rational>& theta() const noexcept { return theta_; }

 private:
  int n_;
  std::vector<Rational> theta_;
};

/// Singular circulant; symbol_index is the Fourier index j whose symbol value
/// vanished in the float screen, or -1 if only the exact solve detected it.
class CirculantSingularError : public Error {
 public:
  explicit CirculantSingularError(int symbol_index)
      : Error(ErrorCode::SingularMatrix,
              "vanishing symbol at j=" + std::to_string(symbol_index)),
        symbol_index_(symbol_index) {}

  int symbol_index() const noexcept { return symbol_index_; }

 private:
  int symbol_index_;
};

class SingularLatticeError : public Error {
 public:
  SingularLatticeError(const std::string& reason,
                       std::optional<std::vector<int>> witness)
      : Error(ErrorCode::SingularLattice, reason),
        witness_(std::move(witness)) {}

  const std::optional<std::vector<int>>& witness() const noexcept {
    return witness_;
  }

 private:
  std::optional<std::vector<int>> witness_;
};

class NumericallySingularError : public Error {
 public:
  explicit NumericallySingularError(int pivot)
      : Error(ErrorCode::NumericallySingular,
              "numerically singular at pivot " + std::to_string(pivot)),
        pivot_(pivot) {}

  int pivot() const noexcept { return pivot_; }

 private:
  int pivot_;
};

}  // namespace hueckel
