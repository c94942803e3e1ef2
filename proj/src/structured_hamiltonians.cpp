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

#include "hueckel/structured_hamiltonians.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hueckel/error.hpp"
#include "hueckel/trig_identities.hpp"

namespace hueckel {

namespace {

constexpr double kPoleTolerance = 1e-9;

void check_site(int site, int n) {
  if (site < 1 || site > n) {
    throw Error(ErrorCode::IndexOutOfRange,
                "site " + std::to_string(site) + " outside 1.." + std::to_string(n));
  }
}

}  // namespace

std::string_view topology_name(Topology topology) noexcept {
  return topology == Topology::Open ? "open" : "cyclic";
}

void validate(const ChainSpec& spec) {
  if (spec.n_sites < 1) {
    throw Error(ErrorCode::InvalidArgument, "n_sites must be positive");
  }
  if (spec.is_alternating() && spec.n_sites % 2 != 0) {
    throw Error(ErrorCode::AlternatingOddN, "bond alternation requires even N");
  }
  if (spec.topology == Topology::Cyclic) {
    if (spec.n_sites < 2 || (spec.n_sites == 2 && spec.is_alternating())) {
      throw Error(ErrorCode::CycleTooSmall, "cycle needs N >= 3");
    }
  }
}

const Rational& bond_coupling(const ChainSpec& spec, int bond) {
  return bond % 2 == 1 ? spec.coupling_odd : spec.coupling_even;
}

ExactMatrix build_hamiltonian(const ChainSpec& spec) {
  validate(spec);
  const auto n = static_cast<std::size_t>(spec.n_sites);
  ExactMatrix h(n, n);
  for (std::size_t bond = 1; bond < n; ++bond) {
    const Rational& c = bond_coupling(spec, static_cast<int>(bond));
    h(bond - 1, bond) = c;
    h(bond, bond - 1) = c;
  }
  if (spec.topology == Topology::Cyclic && n >= 3) {
    const Rational& c = bond_coupling(spec, spec.n_sites);
    h(n - 1, 0) = c;
    h(0, n - 1) = c;
  }
  return h;
}

EigenSystem analytic_eigensystem(const ChainSpec& spec) {
  validate(spec);
  if (!spec.is_uniform()) {
    throw Error(ErrorCode::UnsupportedCouplings,
                "analytic eigensystem needs alpha = beta = 1");
  }
  const int n = spec.n_sites;
  EigenSystem sys;
  sys.n = n;
  sys.eigenvalues.resize(n);
  sys.eigenvectors.assign(static_cast<std::size_t>(n) * n, 0.0);
  auto q = [&](int site0, int col) -> double& {
    return sys.eigenvectors[static_cast<std::size_t>(site0) * n + col];
  };

  if (spec.topology == Topology::Open) {
    sys.omega = std::numbers::pi / (n + 1);
    const double norm = std::sqrt(2.0 / (n + 1));
    for (int r = 1; r <= n; ++r) {
      sys.eigenvalues[r - 1] = 2.0 * std::cos(r * sys.omega);
      for (int i = 1; i <= n; ++i) {
        q(i - 1, r - 1) = norm * std::sin(static_cast<double>(i) * r * sys.omega);
      }
    }
    return sys;
  }

  if (n < 3) throw Error(ErrorCode::CycleTooSmall, "cycle needs N >= 3");
  sys.omega = 2.0 * std::numbers::pi / n;
  const double flat = 1.0 / std::sqrt(static_cast<double>(n));
  const double paired = std::sqrt(2.0 / n);
  for (int j = 0; j < n; ++j) {
    sys.eigenvalues[j] = 2.0 * std::cos(j * sys.omega);
  }
  for (int i = 0; i < n; ++i) {
    q(i, 0) = flat;
    for (int j = 1; 2 * j < n; ++j) {
      const double phase = static_cast<double>(j) * i * sys.omega;
      q(i, j) = paired * std::cos(phase);
      q(i, n - j) = paired * std::sin(phase);
    }
    if (n % 2 == 0) q(i, n / 2) = (i % 2 == 0 ? flat : -flat);
  }
  return sys;
}

double spectral_resolvent_entry(const ChainSpec& spec, int r, int s, double E) {
  const EigenSystem sys = analytic_eigensystem(spec);
  check_site(r, sys.n);
  check_site(s, sys.n);
  for (double lambda : sys.eigenvalues) {
    if (std::fabs(E - lambda) < kPoleTolerance) {
      throw Error(ErrorCode::EnergyAtPole, "E within 1e-9 of eigenvalue " + std::to_string(lambda));
    }
  }
  CompensatedSum sum;
  for (int k = 0; k < sys.n; ++k) {
    sum += sys.vector_entry(r - 1, k) * sys.vector_entry(s - 1, k) / (E - sys.eigenvalues[k]);
  }
  return sum.value();
}

Rational transmission_proxy(const ExactMatrix& g, int r, int s) {
  check_site(r, static_cast<int>(g.rows()));
  check_site(s, static_cast<int>(g.cols()));
  return abs_squared(g(r - 1, s - 1));
}

}  // namespace hueckel
