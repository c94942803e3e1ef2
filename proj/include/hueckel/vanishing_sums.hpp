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
#include <span>
#include <string>
#include <vector>

namespace hueckel {

/// Does the d-dimensional lattice with N = n - 1 sites per axis have an
/// invertible Hamiltonian? n is the number of sites per axis plus one.
struct InvertibilityQuery {
  int dim = 1;
  int n = 2;
};

/// k_1 <= ... <= k_d in 1..n-1 with sum_i cos(k_i pi / n) = 0 exactly.
struct CosineWitness {
  std::vector<int> ks;
  friend bool operator==(const CosineWitness&, const CosineWitness&) = default;
};

/// Element of Z[x]/(x^m - 1), read as a polynomial in a primitive m-th root
/// of unity zeta_m.
struct CyclotomicElement {
  int modulus = 1;
  std::vector<std::int64_t> coeffs;

  /// True iff the element is zero in Z[zeta_m], i.e. the polynomial is
  /// divisible by the m-th cyclotomic polynomial.
  bool is_zero() const;
};

/// Coefficients (constant term first) of the m-th cyclotomic polynomial.
/// Computed once per m by exact division of x^m - 1 and cached.
const std::vector<std::int64_t>& cyclotomic_polynomial(int m);

int smallest_prime_divisor(int n);

/// n odd, d odd and either d < smallest prime divisor of n or n prime. A
/// prime n admits no vanishing odd-length cosine sum, so the divisor bound
/// only bites for composite n.
bool is_invertible(const InvertibilityQuery& q);

/// Human-readable reason for is_invertible's verdict ("3 < 5",
/// "even dimension", "N+1 even", "3 >= 3", "5 prime").
std::string invertibility_reason(const InvertibilityQuery& q);

/// Exact test of sum_i cos(k_i pi/n) = 0 via sum_i zeta_{2n}^{k_i} +
/// zeta_{2n}^{-k_i} in Z[zeta_{2n}].
bool cosine_sum_is_zero_exact(int n, std::span<const int> ks);

/// Exhaustive search over multisets of size d from 1..n-1. Tuples are
/// enumerated non-increasing in reverse lexicographic order and pruned on
/// float partial sums; candidates are confirmed by cosine_sum_is_zero_exact.
/// Returns nullopt when the space is exhausted without a witness, throws
/// BudgetExhausted when more than `budget` nodes would be visited.
std::optional<CosineWitness> find_vanishing_witness(
    const InvertibilityQuery& q, std::uint64_t budget = 100'000'000);

}  // namespace hueckel
