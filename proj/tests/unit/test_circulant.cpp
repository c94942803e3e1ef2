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

#include "hueckel/circulant.hpp"
#include "hueckel/error.hpp"
#include "hueckel/structured_hamiltonians.hpp"
#include "oracles.hpp"

using namespace hueckel;

namespace {

CirculantSpec halves(std::vector<int> twice) {
  CirculantSpec c;
  for (int v : twice) c.first_column.push_back(make_rational(v, 2));
  return c;
}

CirculantSpec column(std::vector<int> values) {
  CirculantSpec c;
  for (int v : values) c.first_column.emplace_back(v);
  return c;
}

ErrorCode code_of(auto&& body) {
  try {
    body();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::IdentityViolation;
}

}  // namespace

TEST_CASE("cyclic inverse first columns follow the mod-4 patterns") {
  CHECK(cyclic_inverse_first_column(5) == halves({1, 1, -1, -1, 1}));
  CHECK(cyclic_inverse_first_column(6) == halves({0, 1, 0, -1, 0, 1}));
  CHECK(cyclic_inverse_first_column(7) == halves({-1, 1, 1, -1, -1, 1, 1}));
  CHECK(code_of([] { cyclic_inverse_first_column(8); }) == ErrorCode::SingularMatrix);
  CHECK(code_of([] { cyclic_inverse_first_column(2); }) == ErrorCode::CycleTooSmall);
}

TEST_CASE("symbol factorization agrees with the recurrence") {
  CHECK(symbol_factorization_inverse(5).first_column[0] == make_rational(1, 2));
  CHECK(symbol_factorization_inverse(6).first_column[0] == 0);
  CHECK(symbol_factorization_inverse(7).first_column[0] == make_rational(-1, 2));
  for (int n = 3; n <= 60; ++n) {
    if (n % 4 == 0) {
      CHECK(code_of([&] { symbol_factorization_inverse(n); }) == ErrorCode::SingularMatrix);
      continue;
    }
    CHECK(symbol_factorization_inverse(n) == cyclic_inverse_first_column(n));
  }
}

TEST_CASE("cyclic inverse matches the adjugate oracle") {
  for (int n = 3; n <= 7; ++n) {
    if (n % 4 == 0) continue;
    const ExactMatrix h = build_hamiltonian(ChainSpec::cyclic(n));
    CHECK(to_matrix(cyclic_inverse_first_column(n)) == oracle::adjugate_inverse(h));
  }
}

TEST_CASE("cycle determinants") {
  CHECK(det_cyclic(5) == 2);
  CHECK(det_cyclic(8) == 0);
  CHECK(det_cyclic(6) == -4);
  CHECK(det_cyclic(2) == -1);
  for (int n = 2; n <= 8; ++n) {
    CHECK(Rational(det_cyclic(n)) == oracle::cofactor_determinant(build_hamiltonian(ChainSpec::cyclic(n))));
  }
}

TEST_CASE("kernel of the 4k-cycle") {
  const auto [v1, v2] = cyclic_kernel_basis(4);
  CHECK(v1 == std::vector<std::int64_t>{0, -1, 0, 1});
  CHECK(v2 == std::vector<std::int64_t>{1, 0, -1, 0});
  const auto [w1, w2] = cyclic_kernel_basis(8);
  CHECK(w1 == std::vector<std::int64_t>{0, -1, 0, 1, 0, -1, 0, 1});
  const ExactMatrix h = build_hamiltonian(ChainSpec::cyclic(8));
  for (const auto* v : {&w1, &w2}) {
    const std::vector<Rational> x(v->begin(), v->end());
    for (const Rational& y : multiply(h, x)) CHECK(y == 0);
  }
  CHECK(code_of([] { cyclic_kernel_basis(6); }) == ErrorCode::NotSingular);
}

TEST_CASE("general circulant inverse") {
  CHECK(circulant_inverse_dft(column({0, 1, 0, 0, 1})) == halves({1, 1, -1, -1, 1}));
  CHECK(circulant_inverse_dft(column({1, 0, 0, 0, 0, 0})) == column({1, 0, 0, 0, 0, 0}));
  try {
    circulant_inverse_dft(column({0, 1, 0, 1}));
    FAIL("expected CirculantSingularError");
  } catch (const CirculantSingularError& e) {
    CHECK(e.code() == ErrorCode::SingularMatrix);
    CHECK((e.symbol_index() == 1 || e.symbol_index() == 3));
  }
  // A nonsymmetric circulant.
  const CirculantSpec c = column({2, 1, 0, 3});
  const CirculantSpec inv = circulant_inverse_dft(c);
  CHECK(oracle::product(to_matrix(c), to_matrix(inv)) == ExactMatrix::identity(4));
  CHECK(to_matrix(inv) == oracle::adjugate_inverse(to_matrix(c)));
}
