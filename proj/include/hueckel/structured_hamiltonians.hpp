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

#include <string_view>
#include <vector>

#include "hueckel/exact_matrix.hpp"
#include "hueckel/rational.hpp"

namespace hueckel {

enum class Topology { Open, Cyclic };

std::string_view topology_name(Topology topology) noexcept;

/// Problem statement for every one-dimensional builder. On-site energies are
/// fixed at zero. Bonds are numbered by their left site: bond i joins sites
/// i and i+1 (the closing bond of a cycle is bond N). Odd bonds carry
/// coupling_odd (beta), even bonds carry coupling_even (alpha).
struct ChainSpec {
  Topology topology = Topology::Open;
  int n_sites = 1;
  Rational coupling_odd = 1;   // beta
  Rational coupling_even = 1;  // alpha

  static ChainSpec open(int n) { return {Topology::Open, n, 1, 1}; }
  static ChainSpec cyclic(int n) { return {Topology::Cyclic, n, 1, 1}; }
  static ChainSpec alternating(Topology topology, int n, Rational alpha,
                               Rational beta) {
    return {topology, n, std::move(beta), std::move(alpha)};
  }

  const Rational& alpha() const noexcept { return coupling_even; }
  const Rational& beta() const noexcept { return coupling_odd; }

  bool is_uniform() const { return coupling_odd == 1 && coupling_even == 1; }
  bool is_alternating() const { return coupling_odd != coupling_even; }
};

/// Throws InvalidArgument, AlternatingOddN or CycleTooSmall. A two-site cycle
/// is accepted only with uniform couplings and is the single-edge matrix
/// [[0,1],[1,0]].
void validate(const ChainSpec& spec);

/// Coupling on bond i (1-based, 1..N for cycles).
const Rational& bond_coupling(const ChainSpec& spec, int bond);

ExactMatrix build_hamiltonian(const ChainSpec& spec);

/// Eigenpairs of a uniform chain. Column r of `eigenvectors` (row-major,
/// N x N) is the eigenvector of eigenvalues[r].
struct EigenSystem {
  std::vector<double> eigenvalues;
  std::vector<double> eigenvectors;
  double omega = 0.0;
  int n = 0;

  double vector_entry(int site, int column) const {
    return eigenvectors[static_cast<std::size_t>(site) * n + column];
  }
};

/// Open chains: lambda_r = 2 cos(r w), w = pi/(N+1), r = 1..N, with the
/// sine eigenvectors. Cycles: lambda_j = 2 cos(2 pi j/N), j = 0..N-1; the
/// complex Fourier pair (j, N-j) is replaced by its real cosine/sine
/// combination so every column stays real and orthonormal.
EigenSystem analytic_eigensystem(const ChainSpec& spec);

/// sum_k C_rk C_sk / (E - lambda_k) over the analytic eigensystem, i.e. the
/// (r,s) entry of (E - H)^-1. At E = 0 this is the Green's function
/// G(r,s) = -H^-1(r,s). Sites are 1-based. Throws EnergyAtPole when E lies
/// within 1e-9 of an eigenvalue.
double spectral_resolvent_entry(const ChainSpec& spec, int r, int s, double E);

/// |G(r,s)|^2 for a Green's function matrix from any engine (1-based sites).
Rational transmission_proxy(const ExactMatrix& g, int r, int s);

}  // namespace hueckel
