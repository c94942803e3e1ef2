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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hueckel/error.hpp"
#include "hueckel/vanishing_sums.hpp"

using namespace hueckel;

namespace {

// Brute force over all non-decreasing d-tuples with an exact confirmation;
// no pruning, so it cross-checks the branch-and-bound search.
bool brute_force_has_witness(int d, int n) {
  std::vector<int> ks(d, 1);
  while (true) {
    double sum = 0.0;
    for (int k : ks) sum += std::cos(k * std::numbers::pi / n);
    if (std::fabs(sum) < 1e-9 && cosine_sum_is_zero_exact(n, ks)) return true;
    int i = d - 1;
    while (i >= 0 && ks[i] == n - 1) --i;
    if (i < 0) return false;
    ++ks[i];
    for (int j = i + 1; j < d; ++j) ks[j] = ks[i];
  }
}

}  // namespace

TEST_CASE("smallest prime divisor") {
  CHECK(smallest_prime_divisor(25) == 5);
  CHECK(smallest_prime_divisor(105) == 3);
  CHECK(smallest_prime_divisor(2) == 2);
  CHECK(smallest_prime_divisor(49) == 7);
  CHECK(smallest_prime_divisor(97) == 97);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<std::int64_t>{-1, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<std::int64_t>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<std::int64_t>{1, 0, -1, 0, 1});
  // Phi_105 is the first with a coefficient outside {-1, 0, 1}.
  const auto& phi105 = cyclotomic_polynomial(105);
  CHECK(phi105.size() == 49);
  CHECK(std::find(phi105.begin(), phi105.end(), -2) != phi105.end());
}

TEST_CASE("cyclotomic zero test") {
  for (int p : {2, 3, 5, 7, 11, 13}) CHECK(CyclotomicElement{p, std::vector<std::int64_t>(p, 1)}.is_zero());
  CHECK_FALSE(CyclotomicElement{6, {1, 1, 1, 0, 0, 0}}.is_zero());
  CHECK(CyclotomicElement{6, {1, 0, 1, 0, 1, 0}}.is_zero());  // 1 + w^2 + w^4
}

TEST_CASE("exact cosine sums") {
  const std::vector<int> a{2, 4, 8};
  CHECK(cosine_sum_is_zero_exact(9, a));
  const std::vector<int> b{1, 2, 3};
  CHECK_FALSE(cosine_sum_is_zero_exact(5, b));
  const std::vector<int> c{2};
  CHECK(cosine_sum_is_zero_exact(4, c));
  const std::vector<int> bad{9};
  CHECK_THROWS_AS(cosine_sum_is_zero_exact(9, bad), Error);
}

TEST_CASE("invertibility predicate") {
  CHECK(is_invertible({3, 25}));
  CHECK(invertibility_reason({3, 25}) == "3 < 5");
  CHECK_FALSE(is_invertible({3, 9}));
  CHECK(invertibility_reason({3, 9}) == "3 >= 3");
  CHECK_FALSE(is_invertible({2, 7}));
  CHECK(invertibility_reason({2, 7}) == "even dimension");
  CHECK_FALSE(is_invertible({1, 6}));
  CHECK(invertibility_reason({1, 6}) == "N+1 even");
  // Prime n: no odd-length vanishing sum exists.
  CHECK(is_invertible({3, 3}));
  CHECK(is_invertible({7, 5}));
  CHECK(invertibility_reason({7, 5}) == "5 prime");
}

TEST_CASE("witness search") {
  const auto w = find_vanishing_witness({3, 9});
  REQUIRE(w.has_value());
  CHECK(w->ks == std::vector<int>{2, 4, 8});
  CHECK_FALSE(find_vanishing_witness({3, 5}).has_value());
  const auto pair = find_vanishing_witness({2, 5});
  REQUIRE(pair.has_value());
  CHECK(pair->ks[0] + pair->ks[1] == 5);
  try {
    find_vanishing_witness({7, 45}, 10);
    FAIL("expected BudgetExhausted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BudgetExhausted);
  }
}

TEST_CASE("search agrees with brute force and the predicate") {
  for (int n = 2; n <= 15; ++n) {
    for (int d = 1; d <= 5; ++d) {
      const InvertibilityQuery q{d, n};
      const auto w = find_vanishing_witness(q);
      CHECK(w.has_value() == brute_force_has_witness(d, n));
      CHECK(w.has_value() == !is_invertible(q));
      if (w) {
        CHECK(std::is_sorted(w->ks.begin(), w->ks.end()));
        CHECK(cosine_sum_is_zero_exact(n, w->ks));
      }
    }
  }
}
