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

#include "hueckel/closed_form_green.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "hueckel/error.hpp"
#include "hueckel/trig_identities.hpp"

namespace hueckel {

namespace {

void check_query(const GreenEntryQuery& q) {
  validate(q.spec);
  const int n = q.spec.n_sites;
  if (q.r < 1 || q.r > n || q.s < 1 || q.s > n) {
    throw Error(ErrorCode::IndexOutOfRange,
                "(" + std::to_string(q.r) + "," + std::to_string(q.s) + ") outside 1.." +
                    std::to_string(n));
  }
}

void require_topology(const ChainSpec& spec, Topology topology) {
  if (spec.topology != topology) {
    throw Error(ErrorCode::MethodNotApplicable,
                "closed form is for " + std::string(topology_name(topology)) + " chains");
  }
}

void require_nonzero_couplings(const ChainSpec& spec) {
  if (sgn(spec.alpha()) == 0 || sgn(spec.beta()) == 0) {
    throw Error(ErrorCode::ZeroCoupling, "alpha and beta must be nonzero");
  }
}

int minus_one_power(long e) { return e % 2 == 0 ? 1 : -1; }

// 1 + (-1)^k and 1 - (-1)^k
int even_bracket(int k) { return 1 + minus_one_power(k); }
int odd_bracket(int k) { return 1 - minus_one_power(k); }

}  // namespace

std::int64_t det_open(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "N must be positive");
  if (n % 2 != 0) return 0;
  return minus_one_power(n / 2);
}

Rational green_open(const GreenEntryQuery& q) {
  check_query(q);
  require_topology(q.spec, Topology::Open);
  if (!q.spec.is_uniform()) {
    throw Error(ErrorCode::UnsupportedCouplings, "green_open needs alpha = beta = 1");
  }
  if (q.spec.n_sites % 2 != 0) throw Error(ErrorCode::SingularMatrix, "N odd");
  const int hi = std::max(q.r, q.s);
  const int lo = std::min(q.r, q.s);
  if (hi % 2 == 0 && lo % 2 == 1) return minus_one_power((hi + lo - 1) / 2);
  return 0;
}

Rational green_bond_alternating(const GreenEntryQuery& q) {
  check_query(q);
  require_topology(q.spec, Topology::Open);
  require_nonzero_couplings(q.spec);
  if (q.spec.n_sites % 2 != 0) throw Error(ErrorCode::SingularMatrix, "N odd");
  const int hi = std::max(q.r, q.s);
  const int lo = std::min(q.r, q.s);
  if (hi % 2 != 0 || lo % 2 != 1) return 0;
  const Rational& alpha = q.spec.alpha();
  const Rational& beta = q.spec.beta();
  return minus_one_power((hi + lo - 1) / 2) * pow(alpha / beta, (hi - lo - 1) / 2) / beta;
}

Rational green_cyclic(const GreenEntryQuery& q) {
  check_query(q);
  require_topology(q.spec, Topology::Cyclic);
  if (!q.spec.is_uniform()) {
    throw Error(ErrorCode::UnsupportedCouplings, "green_cyclic needs alpha = beta = 1");
  }
  const int n = q.spec.n_sites;
  if (n < 3) throw Error(ErrorCode::CycleTooSmall, "cycle needs N >= 3");
  // Diagonals of (H^c)^-1 starting from the main one, times 2.
  static constexpr int kPattern[4][4] = {
      {0, 0, 0, 0}, {1, 1, -1, -1}, {0, 1, 0, -1}, {-1, 1, 1, -1}};
  if (n % 4 == 0) throw Error(ErrorCode::SingularMatrix, "N=4k");
  const int k = ((q.r - q.s) % n + n) % n;
  return make_rational(-kPattern[n % 4][k % 4], 2);
}

Rational green_cyclic_bond_alternating(const GreenEntryQuery& q) {
  check_query(q);
  require_topology(q.spec, Topology::Cyclic);
  require_nonzero_couplings(q.spec);
  const int n = q.spec.n_sites;
  if (n % 2 != 0 || n < 4) {
    throw Error(ErrorCode::InvalidArgument, "cyclic bond alternation needs even N >= 4");
  }
  const Rational& alpha = q.spec.alpha();
  const Rational& beta = q.spec.beta();
  const Rational ratio_ab = -alpha / beta;
  const Rational ratio_ba = -beta / alpha;
  const Rational den_even = beta * (1 - pow(ratio_ab, n / 2));
  const Rational den_odd = alpha * (1 - pow(ratio_ba, n / 2));
  if (sgn(den_even) == 0 || sgn(den_odd) == 0) {
    throw Error(ErrorCode::SingularMatrix,
                alpha == beta && n % 4 == 0 ? "N=4k" : "vanishing denominator");
  }
  const int r = q.r;
  const int s = q.s;
  if ((r - s) % 2 == 0) return 0;
  const long e = r > s ? (r - s - 1) / 2 : (n + r - s - 1) / 2;
  const Rational even_row = pow(ratio_ab, e) / den_even * (even_bracket(r) * odd_bracket(s));
  const Rational odd_row = pow(ratio_ba, e) / den_odd * (odd_bracket(r) * even_bracket(s));
  return -(even_row + odd_row) / 4;
}

Rational green_closed_form(const GreenEntryQuery& q) {
  const ChainSpec& spec = q.spec;
  if (spec.topology == Topology::Open) {
    return spec.is_uniform() ? green_open(q) : green_bond_alternating(q);
  }
  if (spec.is_uniform()) return green_cyclic(q);
  if (!spec.is_alternating()) {
    // Uniformly scaled cycle: G scales as 1/beta.
    require_nonzero_couplings(spec);
    GreenEntryQuery unit = q;
    unit.spec.coupling_odd = 1;
    unit.spec.coupling_even = 1;
    return green_cyclic(unit) / spec.beta();
  }
  return green_cyclic_bond_alternating(q);
}

ExactMatrix green_closed_form_matrix(const ChainSpec& spec) {
  validate(spec);
  const int n = spec.n_sites;
  ExactMatrix g(n, n);
  for (int r = 1; r <= n; ++r) {
    for (int s = 1; s <= n; ++s) g(r - 1, s - 1) = green_closed_form({spec, r, s});
  }
  return g;
}

std::pair<double, Rational> harmonic_sum_identity_check(int n, int r, int s) {
  if (n < 1 || n % 2 != 0) throw Error(ErrorCode::SingularMatrix, "N odd");
  return {direct_green_sum(n, r, s), green_open({ChainSpec::open(n), r, s})};
}

}  // namespace hueckel
