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
#include <vector>

#include "hueckel/exact_matrix.hpp"
#include "hueckel/numeric_oracle.hpp"

namespace hueckel {

/// Hypercubic lattice with open boundaries: d axes of N sites each.
struct LatticeSpec {
  int dim = 1;
  int linear_size = 1;

  static constexpr std::uint64_t kMaxSites = std::uint64_t{1} << 20;

  std::uint64_t sites() const;
};

/// Throws InvalidArgument for non-positive sizes and TooLarge when N^d
/// exceeds LatticeSpec::kMaxSites.
void validate(const LatticeSpec& spec);

/// Site address (k_1, ..., k_d), each 1..N. Flattening is row-major with the
/// first axis slowest: flat = sum_i (k_i - 1) N^{d-i} + 1.
struct MultiIndex {
  std::vector<int> coords;
  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
};

std::uint64_t flatten(const LatticeSpec& spec, const MultiIndex& index);
MultiIndex unflatten(const LatticeSpec& spec, std::uint64_t flat);

/// Default cap on dense cells (rows x cols) for the exact lattice builder;
/// overridable by the caller (the CLI reads HUECKEL_MAX_CELLS).
inline constexpr std::uint64_t kDefaultMaxCells = std::uint64_t{1} << 20;

/// H_d = sum_i I_{N^{i-1}} (x) H_1 (x) I_{N^{d-i}}.
ExactMatrix build_lattice_hamiltonian(const LatticeSpec& spec,
                                      std::uint64_t max_cells = kDefaultMaxCells);

/// 2 sum_i cos(k_i pi/(N+1))
double lattice_eigenvalue(const LatticeSpec& spec, const MultiIndex& k);

/// -(2/(N+1))^d sum_k prod_i sin(r_i k_i w) sin(s_i k_i w) / (2 sum_i cos(k_i w))
/// Existence is decided by is_invertible, never by a float threshold; throws
/// SingularLatticeError (with a witness when the bounded search finds one).
double lattice_green_entry(const LatticeSpec& spec, const MultiIndex& r,
                           const MultiIndex& s);

/// Dense G_d = -Q^{(x)d} Lambda_d^-1 (Q^T)^{(x)d}, contracted one axis at a
/// time. Requires N^d <= 4096.
FloatMatrix lattice_green_matrix(const LatticeSpec& spec);

}  // namespace hueckel
