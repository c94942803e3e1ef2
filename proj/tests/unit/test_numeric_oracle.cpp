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

#include "hueckel/closed_form_green.hpp"
#include "hueckel/error.hpp"
#include "hueckel/lattice_green.hpp"
#include "hueckel/numeric_oracle.hpp"
#include "oracles.hpp"

using namespace hueckel;

TEST_CASE("float matrix construction") {
  CHECK_THROWS_AS(FloatMatrix(2, 2, std::vector<double>{1, 2, 3}), Error);
  CHECK_THROWS_AS(FloatMatrix(1, 1, std::vector<double>{NAN}), Error);
  CHECK(FloatMatrix::identity(3)(1, 1) == 1.0);
}

TEST_CASE("LU inverse needs pivoting") {
  const FloatMatrix swap(2, 2, std::vector<double>{0, 1, 1, 0});
  CHECK(max_abs_diff(lu_inverse(swap), swap) == 0.0);
  const FloatMatrix inv = lu_inverse(to_float(build_hamiltonian(ChainSpec::open(6))));
  const FloatMatrix g = to_float(oracle::six_site_green());
  for (std::size_t r = 0; r < 6; ++r)
    for (std::size_t c = 0; c < 6; ++c) CHECK(std::fabs(inv(r, c) + g(r, c)) < 1e-12);
  try {
    lu_inverse(to_float(build_hamiltonian(ChainSpec::open(5))));
    FAIL("expected NumericallySingular");
  } catch (const NumericallySingularError& e) {
    CHECK(e.pivot() >= 1);
    CHECK(e.pivot() <= 5);
  }
}

TEST_CASE("LU inverse residual bound") {
  for (int n = 2; n <= 40; n += 2) {
    const FloatMatrix h = to_float(build_hamiltonian(ChainSpec::open(n)));
    FloatMatrix res = multiply(h, lu_inverse(h));
    for (int i = 0; i < n; ++i) res(i, i) -= 1.0;
    CHECK(inf_norm(res) <= 1e-8 * n);
  }
}

TEST_CASE("condition screen rejects near-singular matrices") {
  const FloatMatrix m(2, 2, std::vector<double>{1, 1, 1, 1 + 1e-14});
  CHECK_THROWS_AS(lu_inverse(m), NumericallySingularError);
}

TEST_CASE("float determinants") {
  CHECK(det_float(to_float(build_hamiltonian(ChainSpec::open(4)))) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(det_float(to_float(build_hamiltonian(ChainSpec::cyclic(6)))) == doctest::Approx(-4.0).epsilon(1e-10));
  CHECK(det_float(FloatMatrix::identity(5)) == 1.0);
  CHECK(det_float(to_float(build_hamiltonian(ChainSpec::open(5)))) == 0.0);
  for (int n = 1; n <= 64; ++n) {
    CHECK(det_float(to_float(build_hamiltonian(ChainSpec::open(n)))) == doctest::Approx(det_open(n)));
  }
}

TEST_CASE("symmetric eigenvalues") {
  const std::vector<double> two = symmetric_eigenvalues(to_float(build_hamiltonian(ChainSpec::open(2))));
  CHECK(two[0] == doctest::Approx(-1.0));
  CHECK(two[1] == doctest::Approx(1.0));
  const std::vector<double> ring = symmetric_eigenvalues(to_float(build_hamiltonian(ChainSpec::cyclic(6))));
  CHECK(ring.front() == doctest::Approx(-2.0));
  CHECK(ring.back() == doctest::Approx(2.0));
  const std::vector<double> grid = symmetric_eigenvalues(to_float(build_lattice_hamiltonian({2, 3})));
  std::vector<double> expect;
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      expect.push_back(2 * (std::cos(a * std::numbers::pi / 4) + std::cos(b * std::numbers::pi / 4)));
  std::sort(expect.begin(), expect.end());
  for (std::size_t i = 0; i < expect.size(); ++i) CHECK(std::fabs(grid[i] - expect[i]) < 1e-9);
  const FloatMatrix asym(2, 2, std::vector<double>{0, 1, 2, 0});
  try {
    symmetric_eigenvalues(asym);
    FAIL("expected NotSymmetric");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSymmetric);
  }
}

TEST_CASE("real formatting keeps 17 significant digits") {
  CHECK(format_real(1.0) == "1.0000000000000000");
  CHECK(format_real(-0.0) == "0.0000000000000000");
  CHECK(format_real(0.5) == "0.50000000000000000");
  CHECK(format_real(123.25) == "123.25000000000000");
  CHECK(format_real(1e-7) == "9.9999999999999995e-08");
  CHECK(format_real(1e20) == "1.0000000000000000e+20");
  CHECK(std::stod(format_real(0.1 + 0.2)) == 0.1 + 0.2);
}
