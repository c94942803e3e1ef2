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

#include "hueckel/tridiagonal.hpp"

#include <string>

#include "hueckel/error.hpp"

namespace hueckel {

void validate(const TridiagonalSpec& spec) {
  const std::size_t n = spec.diag.size();
  if (n == 0 || spec.sub.size() != n - 1 || spec.sup.size() != n - 1) {
    throw Error(ErrorCode::InvalidArgument, "tridiagonal lengths must be N-1, N, N-1");
  }
}

TridiagonalSpec tridiagonal_of(const ChainSpec& spec) {
  validate(spec);
  if (spec.topology != Topology::Open) {
    throw Error(ErrorCode::MethodNotApplicable, "cyclic chain is not tridiagonal");
  }
  const int n = spec.n_sites;
  TridiagonalSpec t;
  t.diag.assign(n, Rational(0));
  for (int bond = 1; bond < n; ++bond) {
    t.sub.push_back(bond_coupling(spec, bond));
    t.sup.push_back(bond_coupling(spec, bond));
  }
  return t;
}

ExactMatrix to_matrix(const TridiagonalSpec& spec) {
  validate(spec);
  const auto n = static_cast<std::size_t>(spec.size());
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = spec.diag[i];
    if (i + 1 < n) {
      m(i + 1, i) = spec.sub[i];
      m(i, i + 1) = spec.sup[i];
    }
  }
  return m;
}

ThetaPhiTables::ThetaPhiTables(const TridiagonalSpec& spec) : n_(spec.size()) {
  validate(spec);
  const int n = n_;
  const auto& b = spec.diag;

  theta_.resize(n + 2);
  theta_[0] = 0;  // theta_{-1}
  theta_[1] = 1;  // theta_0
  for (int r = 1; r <= n; ++r) {
    Rational t = b[r - 1] * theta(r - 1);
    if (r >= 2) t -= spec.lower(r) * spec.upper(r - 1) * theta(r - 2);
    theta_[r + 1] = std::move(t);
  }

  phi_.resize(n + 2);
  phi_[n] = 1;      // phi_{N+1}
  phi_[n + 1] = 0;  // phi_{N+2}
  for (int s = n; s >= 1; --s) {
    Rational p = b[s - 1] * phi(s + 1);
    if (s <= n - 1) p -= spec.upper(s) * spec.lower(s + 1) * phi(s + 2);
    phi_[s - 1] = std::move(p);
  }
}

ThetaPhiTables theta_phi(const TridiagonalSpec& spec) { return ThetaPhiTables(spec); }

Rational usmani_entry(const TridiagonalSpec& spec, const ThetaPhiTables& tables,
                      int r, int s) {
  const int n = tables.size();
  if (r < 1 || r > n || s < 1 || s > n) {
    throw Error(ErrorCode::IndexOutOfRange, "entry outside 1..N");
  }
  if (sgn(tables.determinant()) == 0) {
    throw TridiagonalSingularError(n, tables.theta_table());
  }
  const int sign = (r + s) % 2 == 0 ? 1 : -1;
  if (r == s) return tables.theta(r - 1) * tables.phi(r + 1) / tables.determinant();
  Rational product = 1;
  if (r < s) {
    for (int i = r; i < s; ++i) product *= spec.upper(i);
    return sign * product * tables.theta(r - 1) * tables.phi(s + 1) / tables.determinant();
  }
  for (int i = s + 1; i <= r; ++i) product *= spec.lower(i);
  return sign * product * tables.theta(s - 1) * tables.phi(r + 1) / tables.determinant();
}

ExactMatrix usmani_inverse(const TridiagonalSpec& spec) {
  const ThetaPhiTables tables(spec);
  const int n = tables.size();
  if (sgn(tables.determinant()) == 0) {
    throw TridiagonalSingularError(n, tables.theta_table());
  }
  const Rational inv_det = Rational(1) / tables.determinant();
  ExactMatrix inv(n, n);
  for (int r = 1; r <= n; ++r) {
    inv(r - 1, r - 1) = tables.theta(r - 1) * tables.phi(r + 1) * inv_det;

    // Above the diagonal: (-1)^{r+s} c_r ... c_{s-1} theta_{r-1} phi_{s+1}.
    Rational product = tables.theta(r - 1) * inv_det;
    for (int s = r + 1; s <= n; ++s) {
      product *= -spec.upper(s - 1);
      inv(r - 1, s - 1) = product * tables.phi(s + 1);
    }
    // Below the diagonal: (-1)^{r+s} a_{s+1} ... a_r theta_{s-1} phi_{r+1}.
    product = tables.phi(r + 1) * inv_det;
    for (int s = r - 1; s >= 1; --s) {
      product *= -spec.lower(s + 1);
      inv(r - 1, s - 1) = product * tables.theta(s - 1);
    }
  }
  return inv;
}

}  // namespace hueckel
