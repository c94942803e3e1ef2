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

// Output documents for the hueckel CLI: CSV rows and compact JSON objects.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hueckel::cli {

inline constexpr std::uint64_t kMaxCsvEntries = 1'000'000;

/// Describes what a matrix document holds. Chains carry a topology name;
/// lattices carry their dimension instead.
struct MatrixMeta {
  std::string topology;
  std::optional<int> lattice_dim;
  int n = 0;
  bool exact = true;
};

using EntryFn = std::function<std::string(std::size_t, std::size_t)>;

void write_matrix_csv(std::ostream& os, std::size_t rows, std::size_t cols, const EntryFn& entry);

/// {"kind":"matrix","topology":...,"n":...,"entries":[[...]],"exact":...}
/// Entries are strings and are streamed row by row.
void write_matrix_json(std::ostream& os, const MatrixMeta& meta, std::size_t rows,
                       std::size_t cols, const EntryFn& entry);

struct MatrixDocument {
  MatrixMeta meta;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::string> entries;  // row-major
};

/// Inverse of write_matrix_json. Throws std::runtime_error on malformed input.
MatrixDocument parse_matrix_json(const std::string& text);
void write_matrix_json(std::ostream& os, const MatrixDocument& doc);

struct ScalarDocument {
  std::string label;  // e.g. "det", "green", "transmission"
  MatrixMeta meta;
  std::string value;
};

void write_scalar_csv(std::ostream& os, const ScalarDocument& doc);
void write_scalar_json(std::ostream& os, const ScalarDocument& doc);

struct DecisionDocument {
  int d = 0;
  int n_plus_one = 0;
  bool invertible = false;
  std::string reason;
  std::optional<std::vector<int>> witness;
};

void write_decision_csv(std::ostream& os, const DecisionDocument& doc);
void write_decision_json(std::ostream& os, const DecisionDocument& doc);

struct CheckRow {
  std::string id;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::string worst_residual;
  std::string tolerance;
};

struct ReportDocument {
  std::string suite;
  int max_n = 0;
  std::uint64_t seed = 0;
  bool all_passed = false;
  std::vector<CheckRow> checks;
};

void write_report_csv(std::ostream& os, const ReportDocument& doc);
void write_report_json(std::ostream& os, const ReportDocument& doc);

}  // namespace hueckel::cli
