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

#include "hueckel/vanishing_sums.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>

#include "hueckel/error.hpp"

namespace hueckel {

namespace {

using BigPoly = std::vector<mpz_class>;

constexpr double kPruneTolerance = 1e-9;

// Exact quotient of dividend by a monic divisor; throws if not exact.
BigPoly divide_exact(BigPoly dividend, const std::vector<std::int64_t>& divisor) {
  const std::size_t db = divisor.size() - 1;
  const std::size_t da = dividend.size() - 1;
  BigPoly quotient(da - db + 1);
  for (std::size_t i = da + 1; i-- > db;) {
    const mpz_class c = dividend[i];
    quotient[i - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) dividend[i - db + j] -= c * divisor[j];
  }
  for (std::size_t i = 0; i < db; ++i) {
    if (dividend[i] != 0) throw Error(ErrorCode::IdentityViolation, "inexact cyclotomic division");
  }
  return quotient;
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::map<int, std::vector<std::int64_t>>& cache() {
  static std::map<int, std::vector<std::int64_t>> c;
  return c;
}

void check_query(const InvertibilityQuery& q) {
  if (q.dim < 1) throw Error(ErrorCode::InvalidArgument, "dimension must be positive");
  if (q.n < 2) throw Error(ErrorCode::InvalidArgument, "n = N+1 must be at least 2");
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(int m) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "cyclotomic index must be positive");
  {
    std::lock_guard lock(cache_mutex());
    auto it = cache().find(m);
    if (it != cache().end()) return it->second;
  }
  // x^m - 1 = prod_{d | m} Phi_d(x)
  BigPoly poly(m + 1);
  poly[0] = -1;
  poly[m] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d == 0) poly = divide_exact(std::move(poly), cyclotomic_polynomial(d));
  }
  std::vector<std::int64_t> coeffs;
  coeffs.reserve(poly.size());
  for (const auto& c : poly) {
    if (!c.fits_slong_p()) throw Error(ErrorCode::TooLarge, "cyclotomic coefficient overflow");
    coeffs.push_back(c.get_si());
  }
  std::lock_guard lock(cache_mutex());
  return cache().emplace(m, std::move(coeffs)).first->second;
}

bool CyclotomicElement::is_zero() const {
  if (modulus < 1) throw Error(ErrorCode::InvalidArgument, "modulus must be positive");
  // Fold into Z[x]/(x^m - 1) first.
  BigPoly rem(modulus);
  for (std::size_t i = 0; i < coeffs.size(); ++i) rem[i % modulus] += coeffs[i];
  const auto& phi = cyclotomic_polynomial(modulus);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = rem.size(); i-- > deg;) {
    const mpz_class c = rem[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) rem[i - deg + j] -= c * phi[j];
  }
  return std::all_of(rem.begin(), rem.end(), [](const mpz_class& c) { return c == 0; });
}

int smallest_prime_divisor(int n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "n must be at least 2");
  if (n % 2 == 0) return 2;
  for (int p = 3; static_cast<long>(p) * p <= n; p += 2) {
    if (n % p == 0) return p;
  }
  return n;
}

bool is_invertible(const InvertibilityQuery& q) {
  check_query(q);
  if (q.n % 2 == 0 || q.dim % 2 == 0) return false;
  const int p = smallest_prime_divisor(q.n);
  // For prime n the cosines cos(2 pi j/n), j < n/2, are linearly independent
  // over Q, so no odd-length sum vanishes whatever d is.
  return q.dim < p || p == q.n;
}

std::string invertibility_reason(const InvertibilityQuery& q) {
  check_query(q);
  if (q.n % 2 == 0) return "N+1 even";
  if (q.dim % 2 == 0) return "even dimension";
  const int p = smallest_prime_divisor(q.n);
  const std::string d = std::to_string(q.dim);
  if (q.dim >= p && p == q.n) return std::to_string(p) + " prime";
  return q.dim < p ? d + " < " + std::to_string(p) : d + " >= " + std::to_string(p);
}

bool cosine_sum_is_zero_exact(int n, std::span<const int> ks) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "n must be at least 2");
  CyclotomicElement element{2 * n, std::vector<std::int64_t>(2 * n)};
  for (int k : ks) {
    if (k < 1 || k > n - 1) throw Error(ErrorCode::InvalidArgument, "k outside 1..n-1");
    element.coeffs[k] += 1;
    element.coeffs[2 * n - k] += 1;
  }
  return element.is_zero();
}

std::optional<CosineWitness> find_vanishing_witness(const InvertibilityQuery& q,
                                                    std::uint64_t budget) {
  check_query(q);
  const int n = q.n;
  const int d = q.dim;
  std::vector<double> cosines(n);
  for (int k = 1; k < n; ++k) cosines[k] = std::cos(k * std::numbers::pi / n);

  std::vector<int> chosen;
  chosen.reserve(d);
  std::uint64_t nodes = 0;

  // Extends `chosen` with values <= kmax; true once a confirmed witness sits
  // in `chosen`.
  auto search = [&](auto&& self, int kmax, double partial) -> bool {
    if (++nodes > budget) {
      throw Error(ErrorCode::BudgetExhausted, "witness search exceeded " + std::to_string(budget) + " nodes");
    }
    const int remaining = d - static_cast<int>(chosen.size());
    if (remaining == 0) {
      if (std::fabs(partial) > kPruneTolerance) return false;
      std::vector<int> ks(chosen.rbegin(), chosen.rend());
      return cosine_sum_is_zero_exact(n, ks);
    }
    // Every remaining term lies in [cos(kmax pi/n), cos(pi/n)].
    if (partial + remaining * cosines[kmax] > kPruneTolerance) return false;
    if (partial + remaining * cosines[1] < -kPruneTolerance) return false;
    for (int k = kmax; k >= 1; --k) {
      chosen.push_back(k);
      if (self(self, k, partial + cosines[k])) return true;
      chosen.pop_back();
    }
    return false;
  };

  if (!search(search, n - 1, 0.0)) return std::nullopt;
  return CosineWitness{std::vector<int>(chosen.rbegin(), chosen.rend())};
}

}  // namespace hueckel
