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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hueckel {

enum class VerifySuite { Open, Cyclic, Alternating, Lattice, NumberTheory, Trig, All };

std::optional<VerifySuite> parse_verify_suite(std::string_view name);
std::string_view verify_suite_name(VerifySuite suite) noexcept;

/// One cross-method check, aggregated over all the cases it ran.
struct CheckResult {
  std::string id;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  double worst_residual = 0.0;  // 0 for exact checks
  double tolerance = 0.0;       // 0 for exact checks

  void record(bool ok, double residual = 0.0);
};

struct VerifyReport {
  VerifySuite suite = VerifySuite::All;
  int max_n = 0;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;  // ordered by id within each suite

  bool all_passed() const;
};

/// Runs the invariant suites with sizes capped by max_n. Deterministic for a
/// given (suite, max_n, seed).
VerifyReport run_verify(VerifySuite suite, int max_n, std::uint64_t seed);

}  // namespace hueckel
