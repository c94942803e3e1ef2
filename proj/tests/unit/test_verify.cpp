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

#include "hueckel/error.hpp"
#include "hueckel/verify.hpp"

using namespace hueckel;

TEST_CASE("suite names round-trip") {
  for (auto s : {VerifySuite::Open, VerifySuite::Cyclic, VerifySuite::Alternating, VerifySuite::Lattice,
                 VerifySuite::NumberTheory, VerifySuite::Trig, VerifySuite::All}) {
    CHECK(parse_verify_suite(verify_suite_name(s)) == s);
  }
  CHECK_FALSE(parse_verify_suite("bogus").has_value());
}

TEST_CASE("every suite passes at small sizes") {
  const VerifyReport report = run_verify(VerifySuite::All, 12, 5);
  CHECK(report.all_passed());
  for (const CheckResult& c : report.checks) {
    INFO(c.id);
    CHECK(c.failed == 0);
    CHECK(c.passed > 0);
    CHECK(c.worst_residual <= c.tolerance);
  }
}

TEST_CASE("reports are deterministic and sorted") {
  const VerifyReport a = run_verify(VerifySuite::Alternating, 10, 99);
  const VerifyReport b = run_verify(VerifySuite::Alternating, 10, 99);
  REQUIRE(a.checks.size() == b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    CHECK(a.checks[i].id == b.checks[i].id);
    CHECK(a.checks[i].passed == b.checks[i].passed);
  }
  for (std::size_t i = 1; i < a.checks.size(); ++i) CHECK(a.checks[i - 1].id < a.checks[i].id);
}

TEST_CASE("a failed record fails the report") {
  VerifyReport r;
  r.checks.push_back({"x", 0, 0, 0.0, 0.0});
  r.checks.back().record(true);
  CHECK(r.all_passed());
  r.checks.back().record(false, 2.0);
  CHECK_FALSE(r.all_passed());
  CHECK(r.checks.back().worst_residual == 2.0);
  CHECK_THROWS_AS(run_verify(VerifySuite::Open, 0, 1), Error);
}
