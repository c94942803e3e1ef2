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

// hueckel: command-line front end over the C API.
//
// Exit codes: 0 ok, 1 verify failure, 2 usage, 3 domain error, 4 singular,
// 5 search budget exhausted.

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "document.hpp"
#include "hueckel/hueckel.h"

namespace {

using namespace hueckel::cli;

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kDomain = 3, kSingular = 4, kBudget = 5 };

struct UsageError {
  std::string message;
};

struct MatrixDeleter {
  void operator()(hk_matrix* m) const { hk_matrix_free(m); }
};
using MatrixPtr = std::unique_ptr<hk_matrix, MatrixDeleter>;

// Prints the failure for status and returns the matching exit code.
int report_failure(hk_status status) {
  switch (status) {
    case HK_ERR_SINGULAR_MATRIX:
    case HK_ERR_SINGULAR_LATTICE:
    case HK_ERR_NUMERICALLY_SINGULAR:
      std::cerr << "singular: " << hk_last_error() << '\n';
      return kSingular;
    case HK_ERR_BUDGET_EXHAUSTED:
      std::cerr << hk_status_name(status) << ": " << hk_last_error() << '\n';
      return kBudget;
    default:
      std::cerr << hk_status_name(status) << ": " << hk_last_error() << '\n';
      return kDomain;
  }
}

std::string entry_text(const hk_matrix* m, std::size_t r, std::size_t c) {
  char buf[128];
  const std::size_t len = hk_matrix_entry_string(m, r, c, buf, sizeof buf);
  if (len < sizeof buf) return std::string(buf, len);
  std::string out(len, '\0');
  hk_matrix_entry_string(m, r, c, out.data(), len + 1);
  return out;
}

std::string real_text(double v) {
  char buf[64];
  hk_format_real(v, buf, sizeof buf);
  return buf;
}

struct ChainOptions {
  std::string topology = "open";
  int n = 0;
  int d = 1;
  std::string alpha = "1";
  std::string beta = "1";
  std::string format = "csv";

  bool lattice() const { return topology == "lattice"; }

  hk_chain chain() const {
    if (!hk_rational_valid(alpha.c_str()) || !hk_rational_valid(beta.c_str())) {
      throw UsageError{"couplings must be exact rationals (p or p/q)"};
    }
    return hk_chain{topology == "open" ? HK_OPEN : HK_CYCLIC, n, alpha.c_str(), beta.c_str()};
  }

  MatrixMeta meta(bool exact) const {
    MatrixMeta m;
    if (lattice()) {
      m.lattice_dim = d;
    } else {
      m.topology = topology;
    }
    m.n = n;
    m.exact = exact;
    return m;
  }

  void check_lattice_couplings() const {
    if (alpha != "1" || beta != "1") throw UsageError{"lattices take no coupling flags"};
  }
};

void add_chain_options(CLI::App* cmd, ChainOptions& o, bool allow_lattice) {
  std::vector<std::string> topologies{"open", "cyclic"};
  if (allow_lattice) topologies.push_back("lattice");
  cmd->add_option("--topology", o.topology, "chain topology")->check(CLI::IsMember(topologies));
  cmd->add_option("--n", o.n, "sites per axis")->required();
  if (allow_lattice) cmd->add_option("--d", o.d, "lattice dimension");
  cmd->add_option("--alpha", o.alpha, "coupling on even bonds (2,3), (4,5), ...");
  cmd->add_option("--beta", o.beta, "coupling on odd bonds (1,2), (3,4), ...");
  cmd->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

int emit_matrix(const hk_matrix* m, const ChainOptions& o) {
  const std::size_t rows = hk_matrix_rows(m);
  const std::size_t cols = hk_matrix_cols(m);
  const EntryFn entry = [m](std::size_t r, std::size_t c) { return entry_text(m, r, c); };
  if (o.format == "csv") {
    if (static_cast<std::uint64_t>(rows) * cols > kMaxCsvEntries) {
      throw UsageError{"matrix has more than 10^6 entries; use --format json"};
    }
    write_matrix_csv(std::cout, rows, cols, entry);
  } else {
    write_matrix_json(std::cout, o.meta(hk_matrix_is_exact(m)), rows, cols, entry);
  }
  return kOk;
}

std::uint64_t max_cells_from_env() {
  const char* env = std::getenv("HUECKEL_MAX_CELLS");
  if (!env || !*env) return 0;
  std::uint64_t value = 0;
  const char* end = env + std::char_traits<char>::length(env);
  const auto [ptr, ec] = std::from_chars(env, end, value);
  if (ec != std::errc() || ptr != end || value == 0) {
    throw UsageError{"HUECKEL_MAX_CELLS must be a positive integer"};
  }
  return value;
}

int cmd_build(const ChainOptions& o) {
  hk_matrix* raw = nullptr;
  hk_status st;
  if (o.lattice()) {
    o.check_lattice_couplings();
    st = hk_build_lattice(o.d, o.n, max_cells_from_env(), &raw);
  } else {
    const hk_chain c = o.chain();
    st = hk_build_chain(&c, &raw);
  }
  if (st != HK_OK) return report_failure(st);
  return emit_matrix(MatrixPtr(raw).get(), o);
}

std::vector<int> parse_index_list(const std::string& text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string part = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size()) {
      throw UsageError{"bad site index: " + text};
    }
    out.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

// A lattice site is either d comma-separated coordinates or one flat index
// (row-major, first axis slowest).
std::vector<int> lattice_site(const std::string& text, int d, int n) {
  std::vector<int> coords = parse_index_list(text);
  if (static_cast<int>(coords.size()) == d) return coords;
  if (coords.size() != 1) throw UsageError{"lattice site needs 1 or " + std::to_string(d) + " indices"};
  std::int64_t flat = coords[0];
  std::int64_t sites = 1;
  for (int i = 0; i < d; ++i) sites *= n;
  if (flat < 1 || flat > sites) {
    std::cerr << hk_status_name(HK_ERR_INDEX_OUT_OF_RANGE) << ": flat index outside lattice\n";
    std::exit(kDomain);
  }
  coords.assign(d, 0);
  flat -= 1;
  for (int i = d - 1; i >= 0; --i) {
    coords[i] = static_cast<int>(flat % n) + 1;
    flat /= n;
  }
  return coords;
}

struct GreenOptions {
  std::string method = "closed";
  std::optional<std::string> r;
  std::optional<std::string> s;
  bool transmission = false;
};

int emit_scalar(const std::string& value, bool exact, const ChainOptions& o, const GreenOptions& g) {
  ScalarDocument doc{g.transmission ? "transmission" : "green", o.meta(exact), value};
  if (o.format == "csv") {
    write_scalar_csv(std::cout, doc);
  } else {
    write_scalar_json(std::cout, doc);
  }
  return kOk;
}

int green_lattice(const ChainOptions& o, const GreenOptions& g) {
  o.check_lattice_couplings();
  if (g.method != "closed" && g.method != "spectral") {
    std::cerr << hk_status_name(HK_ERR_METHOD_NOT_APPLICABLE)
              << ": lattices support the closed (spectral) method only\n";
    return kDomain;
  }
  if (g.r) {
    const std::vector<int> r = lattice_site(*g.r, o.d, o.n);
    const std::vector<int> s = lattice_site(*g.s, o.d, o.n);
    double value = 0.0;
    const hk_status st = hk_green_lattice_entry(o.d, o.n, r.data(), s.data(), &value);
    if (st != HK_OK) return report_failure(st);
    return emit_scalar(real_text(g.transmission ? value * value : value), false, o, g);
  }
  hk_matrix* raw = nullptr;
  hk_status st = hk_green_lattice(o.d, o.n, &raw);
  if (st != HK_OK) return report_failure(st);
  MatrixPtr m(raw);
  if (g.transmission) {
    st = hk_transmission(m.get(), &raw);
    if (st != HK_OK) return report_failure(st);
    m.reset(raw);
  }
  return emit_matrix(m.get(), o);
}

int cmd_green(const ChainOptions& o, const GreenOptions& g) {
  if (g.r.has_value() != g.s.has_value()) throw UsageError{"--r and --s go together"};
  if (o.lattice()) return green_lattice(o, g);
  const hk_method method = g.method == "closed"    ? HK_METHOD_CLOSED
                           : g.method == "usmani"  ? HK_METHOD_USMANI
                           : g.method == "numeric" ? HK_METHOD_NUMERIC
                                                   : HK_METHOD_SPECTRAL;
  const hk_chain c = o.chain();
  hk_matrix* raw = nullptr;
  hk_status st;
  if (g.r) {
    const std::vector<int> r = parse_index_list(*g.r);
    const std::vector<int> s = parse_index_list(*g.s);
    if (r.size() != 1 || s.size() != 1) throw UsageError{"chain sites take a single index"};
    st = hk_green_chain_entry(&c, method, r[0], s[0], &raw);
  } else {
    st = hk_green_chain(&c, method, &raw);
  }
  if (st != HK_OK) return report_failure(st);
  MatrixPtr m(raw);
  if (g.transmission) {
    st = hk_transmission(m.get(), &raw);
    if (st != HK_OK) return report_failure(st);
    m.reset(raw);
  }
  if (g.r) return emit_scalar(entry_text(m.get(), 0, 0), hk_matrix_is_exact(m.get()), o, g);
  return emit_matrix(m.get(), o);
}

int cmd_det(const ChainOptions& o) {
  std::int64_t det = 0;
  const hk_status st = hk_det(o.topology == "open" ? HK_OPEN : HK_CYCLIC, o.n, &det);
  if (st != HK_OK) return report_failure(st);
  ScalarDocument doc{"det", o.meta(true), std::to_string(det)};
  if (o.format == "csv") {
    write_scalar_csv(std::cout, doc);
  } else {
    write_scalar_json(std::cout, doc);
  }
  return kOk;
}

struct InvertibleOptions {
  int d = 0;
  int n_plus_one = 0;
  bool witness = false;
  std::uint64_t budget = 0;
  std::string format = "json";
};

int cmd_invertible(const InvertibleOptions& o) {
  hk_decision* raw = nullptr;
  const hk_status st = hk_invertible(o.d, o.n_plus_one, o.witness, o.budget, &raw);
  if (st != HK_OK) return report_failure(st);
  std::unique_ptr<hk_decision, void (*)(hk_decision*)> decision(raw, hk_decision_free);
  DecisionDocument doc{o.d, o.n_plus_one, hk_decision_invertible(raw) != 0, hk_decision_reason(raw), {}};
  if (hk_decision_has_witness(raw)) {
    doc.witness.emplace();
    for (std::size_t i = 0; i < hk_decision_witness_size(raw); ++i) {
      doc.witness->push_back(hk_decision_witness(raw, i));
    }
  }
  if (o.format == "csv") {
    write_decision_csv(std::cout, doc);
  } else {
    write_decision_json(std::cout, doc);
  }
  return kOk;
}

struct VerifyOptions {
  std::string suite = "all";
  int max_n = 20;
  std::uint64_t seed = 1;
  std::string format = "csv";
};

int cmd_verify(const VerifyOptions& o) {
  hk_report* raw = nullptr;
  const hk_status st = hk_verify(o.suite.c_str(), o.max_n, o.seed, &raw);
  if (st != HK_OK) return report_failure(st);
  std::unique_ptr<hk_report, void (*)(hk_report*)> report(raw, hk_report_free);
  ReportDocument doc{o.suite, o.max_n, o.seed, hk_report_all_passed(raw) != 0, {}};
  for (std::size_t i = 0; i < hk_report_size(raw); ++i) {
    doc.checks.push_back({hk_report_check_id(raw, i), hk_report_passed(raw, i),
                          hk_report_failed(raw, i), real_text(hk_report_worst_residual(raw, i)),
                          real_text(hk_report_tolerance(raw, i))});
  }
  if (o.format == "csv") {
    write_report_csv(std::cout, doc);
  } else {
    write_report_json(std::cout, doc);
  }
  return doc.all_passed ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Green's functions of tight-binding chains, cycles and lattices"};
  app.require_subcommand(1);

  ChainOptions build_opts;
  CLI::App* build = app.add_subcommand("build", "emit the Hamiltonian");
  add_chain_options(build, build_opts, true);

  ChainOptions green_opts;
  GreenOptions green_extra;
  CLI::App* green = app.add_subcommand("green", "emit G = -H^-1 or one entry of it");
  add_chain_options(green, green_opts, true);
  green->add_option("--method", green_extra.method, "closed, usmani, numeric or spectral")
      ->check(CLI::IsMember({"closed", "usmani", "numeric", "spectral"}));
  green->add_option("--r", green_extra.r, "row site (index, or comma list on lattices)");
  green->add_option("--s", green_extra.s, "column site");
  green->add_flag("--transmission", green_extra.transmission, "square the entries");

  ChainOptions det_opts;
  CLI::App* det = app.add_subcommand("det", "exact determinant of the chain Hamiltonian");
  det->add_option("--topology", det_opts.topology)->check(CLI::IsMember({"open", "cyclic"}))->required();
  det->add_option("--n", det_opts.n)->required();
  det->add_option("--format", det_opts.format)->check(CLI::IsMember({"csv", "json"}));

  InvertibleOptions inv_opts;
  CLI::App* inv = app.add_subcommand("invertible", "decide whether the d-dimensional lattice is invertible");
  inv->add_option("--d", inv_opts.d)->required();
  inv->add_option("--n-plus-one", inv_opts.n_plus_one)->required();
  inv->add_flag("--witness", inv_opts.witness, "search for a vanishing cosine sum");
  inv->add_option("--budget", inv_opts.budget, "search node budget (0 = default)");
  inv->add_option("--format", inv_opts.format)->check(CLI::IsMember({"csv", "json"}));

  VerifyOptions verify_opts;
  CLI::App* verify = app.add_subcommand("verify", "run cross-method invariant suites");
  verify->add_option("--suite", verify_opts.suite)
      ->check(CLI::IsMember({"open", "cyclic", "alternating", "lattice", "numbertheory", "trig", "all"}));
  verify->add_option("--max-n", verify_opts.max_n);
  verify->add_option("--seed", verify_opts.seed);
  verify->add_option("--format", verify_opts.format)->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*build) return cmd_build(build_opts);
    if (*green) return cmd_green(green_opts, green_extra);
    if (*det) return cmd_det(det_opts);
    if (*inv) return cmd_invertible(inv_opts);
    return cmd_verify(verify_opts);
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.message << '\n';
    return kUsage;
  }
}
