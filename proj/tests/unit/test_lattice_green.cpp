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

namespace {

ExactMatrix kronecker_sum_oracle(int d, int n) {
  const ExactMatrix h1 = build_hamiltonian(ChainSpec::open(n));
  ExactMatrix sum;
  for (int axis = 0; axis < d; ++axis) {
    ExactMatrix term = ExactMatrix::identity(1);
    for (int f = 0; f < d; ++f) term = oracle::kronecker(term, f == axis ? h1 : ExactMatrix::identity(n));
    sum = axis == 0 ? term : oracle::add(sum, term);
  }
  return sum;
}

}  // namespace

TEST_CASE("lattice Hamiltonian is the Kronecker sum") {
  for (int d = 1; d <= 3; ++d)
    for (int n = 1; n <= 4; ++n) CHECK(build_lattice_hamiltonian({d, n}) == kronecker_sum_oracle(d, n));
  CHECK(build_lattice_hamiltonian({1, 5}) == build_hamiltonian(ChainSpec::open(5)));
  const ExactMatrix square = build_lattice_hamiltonian({2, 2});
  const ExactMatrix cube = build_lattice_hamiltonian({3, 2});
  for (std::size_t r = 0; r < 4; ++r) {
    Rational deg = 0;
    for (std::size_t c = 0; c < 4; ++c) deg += square(r, c);
    CHECK(deg == 2);
  }
  for (std::size_t r = 0; r < 8; ++r) {
    Rational deg = 0;
    for (std::size_t c = 0; c < 8; ++c) deg += cube(r, c);
    CHECK(deg == 3);
  }
}

TEST_CASE("lattice guards") {
  CHECK_THROWS_AS(build_lattice_hamiltonian({3, 11}), Error);  // 1331^2 cells > 2^20
  CHECK(build_lattice_hamiltonian({3, 11}, std::uint64_t{1} << 21).rows() == 1331);
  try {
    validate(LatticeSpec{3, 102});
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooLarge);
  }
  CHECK_THROWS_AS(validate(LatticeSpec{0, 3}), Error);
}

TEST_CASE("multi-index flattening") {
  const LatticeSpec spec{3, 4};
  CHECK(flatten(spec, MultiIndex{{1, 1, 1}}) == 1);
  CHECK(flatten(spec, MultiIndex{{1, 1, 2}}) == 2);
  CHECK(flatten(spec, MultiIndex{{2, 1, 1}}) == 17);
  for (std::uint64_t f = 1; f <= spec.sites(); ++f) CHECK(flatten(spec, unflatten(spec, f)) == f);
}

TEST_CASE("lattice eigenvalues") {
  CHECK(lattice_eigenvalue({3, 4}, MultiIndex{{1, 1, 1}}) == doctest::Approx(6 * std::cos(std::numbers::pi / 5)));
  CHECK(lattice_eigenvalue({3, 4}, MultiIndex{{1, 1, 1}}) == doctest::Approx(4.854101966).epsilon(1e-9));
  CHECK(std::fabs(lattice_eigenvalue({2, 3}, MultiIndex{{1, 3}})) < 1e-15);
  CHECK(lattice_eigenvalue({1, 2}, MultiIndex{{1}}) == doctest::Approx(1.0));

  const LatticeSpec spec{2, 3};
  std::vector<double> analytic;
  for (std::uint64_t f = 1; f <= spec.sites(); ++f) analytic.push_back(lattice_eigenvalue(spec, unflatten(spec, f)));
  std::sort(analytic.begin(), analytic.end());
  const std::vector<double> numeric = symmetric_eigenvalues(to_float(build_lattice_hamiltonian(spec)));
  for (std::size_t i = 0; i < analytic.size(); ++i) CHECK(std::fabs(analytic[i] - numeric[i]) < 1e-9);
}

TEST_CASE("lattice Green's entries") {
  CHECK(lattice_green_entry({1, 6}, MultiIndex{{2}}, MultiIndex{{1}}) == doctest::Approx(-1.0).epsilon(1e-12));
  for (int n : {2, 3, 4, 5}) {
    try {
      lattice_green_entry({2, n}, MultiIndex{{1, 1}}, MultiIndex{{1, 1}});
      FAIL("even dimension must be singular");
    } catch (const SingularLatticeError& e) {
      CHECK(std::string(e.what()) == (n % 2 == 0 ? "even dimension" : "N+1 even"));
      REQUIRE(e.witness().has_value());
    }
  }
  // d = 3, N = 4: entries agree with the LU inverse of the 64 x 64 matrix.
  const LatticeSpec spec{3, 4};
  const FloatMatrix inv = lu_inverse(to_float(build_lattice_hamiltonian(spec)));
  for (std::uint64_t r : {1, 7, 22, 64}) {
    for (std::uint64_t s : {1, 2, 43}) {
      const double entry = lattice_green_entry(spec, unflatten(spec, r), unflatten(spec, s));
      CHECK(std::fabs(entry + inv(r - 1, s - 1)) < 1e-10);
    }
  }
}

TEST_CASE("lattice Green's matrix") {
  const FloatMatrix g1 = lattice_green_matrix({1, 4});
  const FloatMatrix h1inv = lu_inverse(to_float(build_hamiltonian(ChainSpec::open(4))));
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) CHECK(std::fabs(g1(r, c) + h1inv(r, c)) < 1e-10);

  const LatticeSpec spec{3, 4};
  FloatMatrix residual = multiply(to_float(build_lattice_hamiltonian(spec)), lattice_green_matrix(spec));
  for (std::size_t i = 0; i < residual.rows(); ++i) residual(i, i) += 1.0;
  CHECK(inf_norm(residual) <= 1e-8);

  // N = 2, d = 3 is the cube graph: eigenvalues +-1, +-3, invertible.
  const LatticeSpec cube{3, 2};
  FloatMatrix cube_res = multiply(to_float(build_lattice_hamiltonian(cube)), lattice_green_matrix(cube));
  for (std::size_t i = 0; i < cube_res.rows(); ++i) cube_res(i, i) += 1.0;
  CHECK(inf_norm(cube_res) <= 1e-8);

  // N = 8, d = 3: n = 9, 3 >= 3, singular with a witness.
  try {
    lattice_green_matrix({3, 8});
    FAIL("expected SingularLattice");
  } catch (const SingularLatticeError& e) {
    CHECK(std::string(e.what()) == "3 >= 3");
    REQUIRE(e.witness().has_value());
    CHECK(*e.witness() == std::vector<int>{2, 4, 8});
  }
}
