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

#include "document.hpp"

#include <json.hpp>
#include <ostream>
#include <stdexcept>

namespace hueckel::cli {

using Json = nlohmann::ordered_json;

namespace {

void write_meta(std::ostream& os, const MatrixMeta& meta) {
  if (meta.lattice_dim) {
    os << "\"lattice\":" << *meta.lattice_dim;
  } else {
    os << "\"topology\":" << Json(meta.topology).dump();
  }
  os << ",\"n\":" << meta.n;
}

Json meta_json(const MatrixMeta& meta) {
  Json j;
  if (meta.lattice_dim) {
    j["lattice"] = *meta.lattice_dim;
  } else {
    j["topology"] = meta.topology;
  }
  j["n"] = meta.n;
  return j;
}

}  // namespace

void write_matrix_csv(std::ostream& os, std::size_t rows, std::size_t cols, const EntryFn& entry) {
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c) os << ',';
      os << entry(r, c);
    }
    os << '\n';
  }
}

void write_matrix_json(std::ostream& os, const MatrixMeta& meta, std::size_t rows,
                       std::size_t cols, const EntryFn& entry) {
  os << "{\"kind\":\"matrix\",";
  write_meta(os, meta);
  os << ",\"entries\":[";
  for (std::size_t r = 0; r < rows; ++r) {
    os << (r ? ",[" : "[");
    for (std::size_t c = 0; c < cols; ++c) {
      if (c) os << ',';
      os << Json(entry(r, c)).dump();
    }
    os << ']';
  }
  os << "],\"exact\":" << (meta.exact ? "true" : "false") << "}\n";
}

MatrixDocument parse_matrix_json(const std::string& text) {
  const Json j = Json::parse(text);
  if (j.at("kind") != "matrix") throw std::runtime_error("not a matrix document");
  MatrixDocument doc;
  if (j.contains("lattice")) {
    doc.meta.lattice_dim = j.at("lattice").get<int>();
  } else {
    doc.meta.topology = j.at("topology").get<std::string>();
  }
  doc.meta.n = j.at("n").get<int>();
  doc.meta.exact = j.at("exact").get<bool>();
  const Json& rows = j.at("entries");
  doc.rows = rows.size();
  doc.cols = doc.rows ? rows.at(0).size() : 0;
  for (const Json& row : rows) {
    if (row.size() != doc.cols) throw std::runtime_error("ragged matrix rows");
    for (const Json& v : row) doc.entries.push_back(v.get<std::string>());
  }
  return doc;
}

void write_matrix_json(std::ostream& os, const MatrixDocument& doc) {
  write_matrix_json(os, doc.meta, doc.rows, doc.cols,
                    [&](std::size_t r, std::size_t c) { return doc.entries[r * doc.cols + c]; });
}

void write_scalar_csv(std::ostream& os, const ScalarDocument& doc) { os << doc.value << '\n'; }

void write_scalar_json(std::ostream& os, const ScalarDocument& doc) {
  Json j;
  j["kind"] = "scalar";
  j["quantity"] = doc.label;
  j.update(meta_json(doc.meta));
  j["value"] = doc.value;
  j["exact"] = doc.meta.exact;
  os << j.dump() << '\n';
}

void write_decision_csv(std::ostream& os, const DecisionDocument& doc) {
  os << (doc.invertible ? "true" : "false") << ',' << doc.reason;
  if (doc.witness) {
    for (int k : *doc.witness) os << ',' << k;
  }
  os << '\n';
}

void write_decision_json(std::ostream& os, const DecisionDocument& doc) {
  Json j;
  j["kind"] = "decision";
  j["d"] = doc.d;
  j["n_plus_one"] = doc.n_plus_one;
  j["invertible"] = doc.invertible;
  j["reason"] = doc.reason;
  if (doc.witness) j["witness"] = *doc.witness;
  os << j.dump() << '\n';
}

void write_report_csv(std::ostream& os, const ReportDocument& doc) {
  for (const CheckRow& c : doc.checks) {
    os << c.id << ',' << c.passed << ',' << c.failed << ',' << c.worst_residual << ','
       << c.tolerance << '\n';
  }
}

void write_report_json(std::ostream& os, const ReportDocument& doc) {
  Json j;
  j["kind"] = "report";
  j["suite"] = doc.suite;
  j["max_n"] = doc.max_n;
  j["seed"] = doc.seed;
  j["all_passed"] = doc.all_passed;
  Json checks = Json::array();
  for (const CheckRow& c : doc.checks) {
    checks.push_back({{"id", c.id},
                      {"passed", c.passed},
                      {"failed", c.failed},
                      {"worst_residual", c.worst_residual},
                      {"tolerance", c.tolerance}});
  }
  j["checks"] = std::move(checks);
  os << j.dump() << '\n';
}

}  // namespace hueckel::cli
