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

#include <vector>

#include "hueckel/exact_matrix.hpp"
#include "hueckel/rational.hpp"
#include "hueckel/structured_hamiltonians.hpp"

namespace hueckel {

/// General N x N tridiagonal matrix.
///   sub[i]  = A(i+2, i+1)  (below the diagonal, 1-based rows/cols)
///   diag[i] = A(i+1, i+1)
///   sup[i]  = A(i+1, i+2)  (above the diagonal)
struct TridiagonalSpec {
  std::vector<Rational> sub;
  std::vector<Rational> diag;
  std::vector<Rational> sup;

  int size() const noexcept { return static_cast<int>(diag.size()); }

  /// A(i, i-1) for i = 2..N.
  const Rational& lower(int i) const { return sub[i - 2]; }
  /// A(i, i+1) for i = 1..N-1.
  const Rational& upper(int i) const { return sup[i - 1]; }
};

/// Throws InvalidArgument unless |diag| >= 1 and |sub| = |sup| = |diag| - 1.
void validate(const TridiagonalSpec& spec);

/// Extracts the tridiagonal part of an open chain Hamiltonian.
TridiagonalSpec tridiagonal_of(const ChainSpec& spec);

ExactMatrix to_matrix(const TridiagonalSpec& spec);

/// Leading (theta) and trailing (phi) principal-minor recursions:
///   theta_r = b_r theta_{r-1} - A(r,r-1) A(r-1,r) theta_{r-2}
///   phi_s   = b_s phi_{s+1}   - A(s,s+1) A(s+1,s) phi_{s+2}
/// with theta_{-1} = 0, theta_0 = 1, phi_{N+1} = 1, phi_{N+2} = 0.
class ThetaPhiTables {
 public:
  explicit ThetaPhiTables(const TridiagonalSpec& spec);

  int size() const noexcept { return n_; }
  /// r in -1..N
  const Rational& theta(int r) const { return theta_[r + 1]; }
  /// s in 1..N+2
  const Rational& phi(int s) const { return phi_[s - 1]; }
  const Rational& determinant() const { return theta(n_); }

  const std::vector<Rational>& theta_table() const noexcept { return theta_; }

 private:
  int n_;
  std::vector<Rational> theta_;
  std::vector<Rational> phi_;
};

ThetaPhiTables theta_phi(const TridiagonalSpec& spec);

/// Single entry (1-based) of the inverse in O(N); throws
/// TridiagonalSingularError when theta_N = 0.
Rational usmani_entry(const TridiagonalSpec& spec,
                      const ThetaPhiTables& tables, int r, int s);

/// Full inverse in O(N^2); products along each row are accumulated
/// incrementally.
ExactMatrix usmani_inverse(const TridiagonalSpec& spec);

}  // namespace hueckel
