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
#include <utility>

#include "hueckel/exact_matrix.hpp"
#include "hueckel/rational.hpp"
#include "hueckel/structured_hamiltonians.hpp"

// Closed-form Green's functions G = -H^-1 at E = 0. Every function returns
// G itself, never H^-1. Site indices are 1-based.

namespace hueckel {

struct GreenEntryQuery {
  ChainSpec spec;
  int r = 1;
  int s = 1;
};

/// (-1)^{N/2} for even N, 0 for odd N.
std::int64_t det_open(int n);

/// Uniform open chain, N even:
///   G(r,s) = (-1)^{(r+s-1)/2} if r > s, r even, s odd (or the mirror)
///   G(r,s) = 0 otherwise.
Rational green_open(const GreenEntryQuery& q);

/// Open chain with beta on odd bonds and alpha on even bonds, N even:
///   G(r,s) = (-1)^{(r+s-1)/2} (alpha/beta)^{(|r-s|-1)/2} / beta
/// when the larger index is even and the smaller odd, 0 otherwise.
Rational green_bond_alternating(const GreenEntryQuery& q);

/// Uniform N-cycle, N mod 4 != 0: Toeplitz with period-4 diagonals
/// -1/2 (1,1,-1,-1), -1/2 (0,1,0,-1), -1/2 (-1,1,1,-1) for N = 1, 2, 3 mod 4.
Rational green_cyclic(const GreenEntryQuery& q);

/// Cyclic chain with alternating couplings (closing bond alpha), N even >= 4.
/// Throws SingularMatrix when 1 - (-alpha/beta)^{N/2} or 1 - (-beta/alpha)^{N/2}
/// vanishes.
Rational green_cyclic_bond_alternating(const GreenEntryQuery& q);

/// Dispatches to the matching closed form for spec (uniform or alternating,
/// open or cyclic).
Rational green_closed_form(const GreenEntryQuery& q);

/// Full matrix from green_closed_form.
ExactMatrix green_closed_form_matrix(const ChainSpec& spec);

/// Both sides of the harmonic-sum identity for the uniform open chain:
/// -(1/(N+1)) sum_k sin(rkw) sin(skw)/cos(kw) in floating point, and the
/// exact closed-form value.
std::pair<double, Rational> harmonic_sum_identity_check(int n, int r, int s);

}  // namespace hueckel
