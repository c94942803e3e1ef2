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

#include "hueckel/lattice_green.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hueckel/error.hpp"
#include "hueckel/trig_identities.hpp"
#include "hueckel/vanishing_sums.hpp"

namespace hueckel {

namespace {

constexpr std::uint64_t kMaxGreenSites = 4096;
constexpr std::uint64_t kWitnessBudget = 1'000'000;

void check_index(const LatticeSpec& spec, const MultiIndex& index) {
  if (static_cast<int>(index.coords.size()) != spec.dim) {
    throw Error(ErrorCode::IndexOutOfRange, "multi-index has wrong dimension");
  }
  for (int k : index.coords) {
    if (k < 1 || k > spec.linear_size) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "coordinate " + std::to_string(k) + " outside 1.." + std::to_string(spec.linear_size));
    }
  }
}

void require_invertible(const LatticeSpec& spec) {
  const InvertibilityQuery q{spec.dim, spec.linear_size + 1};
  if (is_invertible(q)) return;
  std::optional<std::vector<int>> witness;
  try {
    if (auto w = find_vanishing_witness(q, kWitnessBudget)) witness = std::move(w->ks);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::BudgetExhausted) throw;
  }
  throw SingularLatticeError(invertibility_reason(q), std::move(witness));
}

// Eigenvectors of the open chain: Q(r, k) = sqrt(2/(N+1)) sin(r k w).
std::vector<double> chain_eigenvectors(int n) {
  const double omega = std::numbers::pi / (n + 1);
  const double norm = std::sqrt(2.0 / (n + 1));
  std::vector<double> q(static_cast<std::size_t>(n) * n);
  for (int r = 1; r <= n; ++r) {
    for (int k = 1; k <= n; ++k) {
      q[(r - 1) * n + (k - 1)] = norm * std::sin(static_cast<double>(r) * k * omega);
    }
  }
  return q;
}

// out(..., a, ...) = sum_b q(a, b) in(..., b, ...) along one axis of the
// flattened row index (rows = true) or column index.
FloatMatrix contract_axis(const FloatMatrix& in, const std::vector<double>& q, int n,
                          std::uint64_t stride, bool rows) {
  const std::size_t m = in.rows();
  FloatMatrix out(m, m);
  const std::size_t block = stride * n;
  if (rows) {
    for (std::size_t base = 0; base < m; base += block) {
      for (std::uint64_t low = 0; low < stride; ++low) {
        for (int a = 0; a < n; ++a) {
          double* dst = &out(base + low + a * stride, 0);
          for (int b = 0; b < n; ++b) {
            const double w = q[a * n + b];
            const double* src = in.entries().data() + (base + low + b * stride) * m;
            for (std::size_t c = 0; c < m; ++c) dst[c] += w * src[c];
          }
        }
      }
    }
    return out;
  }
  for (std::size_t row = 0; row < m; ++row) {
    const double* src = in.entries().data() + row * m;
    double* dst = &out(row, 0);
    for (std::size_t base = 0; base < m; base += block) {
      for (std::uint64_t low = 0; low < stride; ++low) {
        for (int a = 0; a < n; ++a) {
          double acc = 0.0;
          for (int b = 0; b < n; ++b) acc += q[a * n + b] * src[base + low + b * stride];
          dst[base + low + a * stride] = acc;
        }
      }
    }
  }
  return out;
}

}  // namespace

std::uint64_t LatticeSpec::sites() const {
  std::uint64_t out = 1;
  for (int i = 0; i < dim; ++i) {
    out *= static_cast<std::uint64_t>(linear_size);
    if (out > kMaxSites) return kMaxSites + 1;
  }
  return out;
}

void validate(const LatticeSpec& spec) {
  if (spec.dim < 1 || spec.linear_size < 1) {
    throw Error(ErrorCode::InvalidArgument, "lattice dimension and size must be positive");
  }
  if (spec.sites() > LatticeSpec::kMaxSites) {
    throw Error(ErrorCode::TooLarge, "N^d exceeds " + std::to_string(LatticeSpec::kMaxSites) + " sites");
  }
}

std::uint64_t flatten(const LatticeSpec& spec, const MultiIndex& index) {
  check_index(spec, index);
  std::uint64_t flat = 0;
  for (int k : index.coords) flat = flat * spec.linear_size + (k - 1);
  return flat + 1;
}

MultiIndex unflatten(const LatticeSpec& spec, std::uint64_t flat) {
  validate(spec);
  if (flat < 1 || flat > spec.sites()) throw Error(ErrorCode::IndexOutOfRange, "flat index outside lattice");
  MultiIndex index{std::vector<int>(spec.dim)};
  std::uint64_t rest = flat - 1;
  for (int i = spec.dim - 1; i >= 0; --i) {
    index.coords[i] = static_cast<int>(rest % spec.linear_size) + 1;
    rest /= spec.linear_size;
  }
  return index;
}

ExactMatrix build_lattice_hamiltonian(const LatticeSpec& spec, std::uint64_t max_cells) {
  validate(spec);
  const std::uint64_t m = spec.sites();
  if (m > max_cells / m) {
    throw Error(ErrorCode::TooLarge, std::to_string(m) + "^2 cells exceed the limit of " + std::to_string(max_cells));
  }
  const int n = spec.linear_size;
  ExactMatrix h(m, m);
  for (std::uint64_t site = 0; site < m; ++site) {
    // Axis i (1-based) has stride N^{d-i}.
    std::uint64_t stride = 1;
    for (int axis = spec.dim - 1; axis >= 0; --axis) {
      const auto coord = static_cast<int>((site / stride) % n);
      if (coord + 1 < n) {
        h(site, site + stride) = 1;
        h(site + stride, site) = 1;
      }
      stride *= n;
    }
  }
  return h;
}

double lattice_eigenvalue(const LatticeSpec& spec, const MultiIndex& k) {
  validate(spec);
  check_index(spec, k);
  const double omega = std::numbers::pi / (spec.linear_size + 1);
  CompensatedSum sum;
  for (int ki : k.coords) sum += std::cos(ki * omega);
  return 2.0 * sum.value();
}

double lattice_green_entry(const LatticeSpec& spec, const MultiIndex& r, const MultiIndex& s) {
  validate(spec);
  check_index(spec, r);
  check_index(spec, s);
  require_invertible(spec);

  const int n = spec.linear_size;
  const int d = spec.dim;
  const double omega = std::numbers::pi / (n + 1);
  // weights[i][k-1] = sin(r_i k w) sin(s_i k w)
  std::vector<std::vector<double>> weights(d, std::vector<double>(n));
  for (int i = 0; i < d; ++i) {
    for (int k = 1; k <= n; ++k) {
      weights[i][k - 1] = std::sin(static_cast<double>(r.coords[i]) * k * omega) *
                          std::sin(static_cast<double>(s.coords[i]) * k * omega);
    }
  }
  std::vector<double> cosines(n);
  for (int k = 1; k <= n; ++k) cosines[k - 1] = std::cos(k * omega);

  std::vector<int> k(d, 0);  // 0-based odometer, last axis fastest
  CompensatedSum sum;
  while (true) {
    double numerator = 1.0;
    double eigenvalue = 0.0;
    for (int i = 0; i < d; ++i) {
      numerator *= weights[i][k[i]];
      eigenvalue += cosines[k[i]];
    }
    sum += numerator / (2.0 * eigenvalue);
    int axis = d - 1;
    while (axis >= 0 && ++k[axis] == n) k[axis--] = 0;
    if (axis < 0) break;
  }
  return -std::pow(2.0 / (n + 1), d) * sum.value();
}

FloatMatrix lattice_green_matrix(const LatticeSpec& spec) {
  validate(spec);
  require_invertible(spec);
  const std::uint64_t m = spec.sites();
  if (m > kMaxGreenSites) {
    throw Error(ErrorCode::TooLarge, "dense lattice Green's function limited to 4096 sites");
  }
  const int n = spec.linear_size;
  const std::vector<double> q = chain_eigenvectors(n);

  FloatMatrix work(m, m);
  for (std::uint64_t flat = 1; flat <= m; ++flat) {
    work(flat - 1, flat - 1) = 1.0 / lattice_eigenvalue(spec, unflatten(spec, flat));
  }
  // Right factor (Q^T)^{(x)d}: column digit s_i gets sum_k Y(.., k, ..) Q(s_i, k).
  std::uint64_t stride = 1;
  for (int axis = 0; axis < spec.dim; ++axis) {
    work = contract_axis(work, q, n, stride, false);
    stride *= n;
  }
  // Left factor Q^{(x)d}: row digit r_i gets sum_k Q(r_i, k) Y(.., k, ..).
  stride = 1;
  for (int axis = 0; axis < spec.dim; ++axis) {
    work = contract_axis(work, q, n, stride, true);
    stride *= n;
  }
  for (double& v : work.entries()) v = -v;
  return work;
}

}  // namespace hueckel
