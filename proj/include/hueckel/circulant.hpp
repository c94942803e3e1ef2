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

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "hueckel/exact_matrix.hpp"
#include "hueckel/rational.hpp"

namespace hueckel {

/// Circulant matrix given by its first column: entry (r,s) = x[(r-s) mod N].
/// Equivalently sum_k x_k S^k where S is the cyclic down-shift.
struct CirculantSpec {
  std::vector<Rational> first_column;

  int size() const noexcept { return static_cast<int>(first_column.size()); }
  bool is_symmetric() const;
  friend bool operator==(const CirculantSpec&, const CirculantSpec&) = default;
};

ExactMatrix to_matrix(const CirculantSpec& spec);

/// First column of the inverse of the uniform N-cycle Hamiltonian, solved
/// from H x = e_1 row by row. Requires N >= 3 and N mod 4 != 0.
CirculantSpec cyclic_inverse_first_column(int n);

/// The same inverse from S + S^-1 = (I - iS)(I + iS)S^-1: the cyclic
/// convolution of the two geometric series in +-i, shifted once and divided
/// by (1 - i^N)(1 - (-i)^N). Gaussian-integer arithmetic throughout.
CirculantSpec symbol_factorization_inverse(int n);

/// det of the uniform N-cycle (N = 2 is the single-edge matrix).
std::int64_t det_cyclic(int n);

/// Kernel basis of the uniform 4k-cycle: k-fold tilings of (0,-1,0,1) and
/// (1,0,-1,0). Throws NotSingular for N mod 4 != 0.
std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>
cyclic_kernel_basis(int n);

/// General circulant inverse. The symbol values sum_k x_k w^{jk} are screened
/// in floating point; the returned column always comes from an exact solve.
/// Throws CirculantSingularError if the exact solve finds no inverse.
CirculantSpec circulant_inverse_dft(const CirculantSpec& spec);

}  // namespace hueckel
