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

#include "hueckel/hueckel.h"

#include <algorithm>
#include <cstring>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hueckel/closed_form_green.hpp"
#include "hueckel/circulant.hpp"
#include "hueckel/error.hpp"
#include "hueckel/lattice_green.hpp"
#include "hueckel/numeric_oracle.hpp"
#include "hueckel/structured_hamiltonians.hpp"
#include "hueckel/tridiagonal.hpp"
#include "hueckel/vanishing_sums.hpp"
#include "hueckel/verify.hpp"

struct hk_matrix {
  std::variant<hueckel::ExactMatrix, hueckel::FloatMatrix> value;
};

struct hk_decision {
  bool invertible = false;
  std::string reason;
  std::optional<std::vector<int>> witness;
};

struct hk_report {
  hueckel::VerifyReport report;
};

namespace {

using namespace hueckel;

thread_local std::string last_error;

constexpr std::uint64_t kDefaultWitnessBudget = 100'000'000;

hk_status status_of(ErrorCode code) {
  return static_cast<hk_status>(static_cast<int>(code) + 1);
}

hk_status fail(hk_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs body, translating exceptions into a status and last_error.
template <class F>
hk_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return HK_OK;
  } catch (const Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(HK_ERR_TOO_LARGE, "out of memory");
  } catch (const std::exception& e) {
    return fail(HK_ERR_INTERNAL, e.what());
  }
}

Rational coupling(const char* text) { return text ? parse_rational(text) : Rational(1); }

ChainSpec chain_spec(const hk_chain& c) {
  if (c.topology != HK_OPEN && c.topology != HK_CYCLIC) {
    throw Error(ErrorCode::InvalidArgument, "unknown topology");
  }
  const Topology t = c.topology == HK_OPEN ? Topology::Open : Topology::Cyclic;
  ChainSpec spec = ChainSpec::alternating(t, c.n, coupling(c.alpha), coupling(c.beta));
  validate(spec);
  return spec;
}

void check_entry(const ChainSpec& spec, int r, int s) {
  if (r < 1 || r > spec.n_sites || s < 1 || s > spec.n_sites) {
    throw Error(ErrorCode::IndexOutOfRange, "site index outside 1.." + std::to_string(spec.n_sites));
  }
}

FloatMatrix numeric_green(const ChainSpec& spec) {
  FloatMatrix g = lu_inverse(to_float(build_hamiltonian(spec)));
  for (double& v : g.entries()) v = -v;
  return g;
}

hk_matrix* green_matrix(const ChainSpec& spec, hk_method method) {
  switch (method) {
    case HK_METHOD_CLOSED:
      return new hk_matrix{green_closed_form_matrix(spec)};
    case HK_METHOD_USMANI:
      return new hk_matrix{-usmani_inverse(tridiagonal_of(spec))};
    case HK_METHOD_NUMERIC:
      return new hk_matrix{numeric_green(spec)};
    case HK_METHOD_SPECTRAL: {
      const auto n = static_cast<std::size_t>(spec.n_sites);
      FloatMatrix g(n, n);
      for (int r = 1; r <= spec.n_sites; ++r) {
        for (int s = 1; s <= spec.n_sites; ++s) g(r - 1, s - 1) = spectral_resolvent_entry(spec, r, s, 0.0);
      }
      return new hk_matrix{std::move(g)};
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown method");
}

hk_matrix* green_entry(const ChainSpec& spec, hk_method method, int r, int s) {
  check_entry(spec, r, s);
  switch (method) {
    case HK_METHOD_CLOSED: {
      ExactMatrix m(1, 1);
      m(0, 0) = green_closed_form({spec, r, s});
      return new hk_matrix{std::move(m)};
    }
    case HK_METHOD_USMANI: {
      const TridiagonalSpec t = tridiagonal_of(spec);
      ExactMatrix m(1, 1);
      m(0, 0) = -usmani_entry(t, theta_phi(t), r, s);
      return new hk_matrix{std::move(m)};
    }
    case HK_METHOD_NUMERIC:
      return new hk_matrix{FloatMatrix(1, 1, numeric_green(spec)(r - 1, s - 1))};
    case HK_METHOD_SPECTRAL:
      return new hk_matrix{FloatMatrix(1, 1, spectral_resolvent_entry(spec, r, s, 0.0))};
  }
  throw Error(ErrorCode::InvalidArgument, "unknown method");
}

size_t copy_out(const std::string& text, char* buf, size_t cap) {
  if (buf && cap > 0) {
    const size_t k = std::min(cap - 1, text.size());
    std::memcpy(buf, text.data(), k);
    buf[k] = '\0';
  }
  return text.size();
}

std::string entry_string(const hk_matrix& m, std::size_t row, std::size_t col) {
  if (const auto* e = std::get_if<ExactMatrix>(&m.value)) return to_string((*e)(row, col));
  return format_real(std::get<FloatMatrix>(m.value)(row, col));
}

}  // namespace

extern "C" {

const char* hk_status_name(hk_status status) {
  switch (status) {
    case HK_OK: return "Ok";
    case HK_ERR_NULL_ARGUMENT: return "NullArgument";
    case HK_ERR_INTERNAL: return "Internal";
    default: break;
  }
  if (status > HK_OK && status < HK_ERR_NULL_ARGUMENT) {
    return error_code_name(static_cast<ErrorCode>(status - 1)).data();
  }
  return "Unknown";
}

const char* hk_last_error(void) { return last_error.c_str(); }

size_t hk_format_real(double value, char* buf, size_t cap) {
  return copy_out(format_real(value), buf, cap);
}

int hk_rational_valid(const char* text) {
  if (!text) return 0;
  try {
    parse_rational(text);
    return 1;
  } catch (const std::exception&) {
    return 0;
  }
}

hk_status hk_build_chain(const hk_chain* chain, hk_matrix** out) {
  if (!chain || !out) return fail(HK_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] { *out = new hk_matrix{build_hamiltonian(chain_spec(*chain))}; });
}

hk_status hk_build_lattice(int d, int n, uint64_t max_cells, hk_matrix** out) {
  if (!out) return fail(HK_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new hk_matrix{build_lattice_hamiltonian(LatticeSpec{d, n}, max_cells ? max_cells : kDefaultMaxCells)};
  });
}

hk_status hk_green_chain(const hk_chain* chain, hk_method method, hk_matrix** out) {
  if (!chain || !out) return fail(HK_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] { *out = green_matrix(chain_spec(*chain), method); });
}

hk_status hk_green_chain_entry(const hk_chain* chain, hk_method method, int r, int s, hk_matrix** out) {
  if (!chain || !out) return fail(HK_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] { *out = green_entry(chain_spec(*chain), method, r, s); });
}

hk_status hk_green_lattice(int d, int n, hk_matrix** out) {
  if (!out) return fail(HK_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] { *out = new hk_matrix{lattice_green_matrix(LatticeSpec{d, n})}; });
}

hk_status hk_green_lattice_entry(int d, int n, const int* r, const int* s, double* out) {
  if (!r || !s || !out) return fail(HK_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    const LatticeSpec spec{d, n};
    validate(spec);
    *out = lattice_green_entry(spec, MultiIndex{{r, r + d}}, MultiIndex{{s, s + d}});
  });
}

hk_status hk_transmission(const hk_matrix* g, hk_matrix** out) {
  if (!g || !out) return fail(HK_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    *out = std::visit([](auto m) {
      for (auto& v : m.entries()) v = v * v;
      return new hk_matrix{std::move(m)};
    }, g->value);
  });
}

hk_status hk_det(hk_topology topology, int n, int64_t* out) {
  if (!out) return fail(HK_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    if (topology == HK_OPEN) {
      *out = det_open(n);
    } else if (topology == HK_CYCLIC) {
      if (n < 2) throw Error(ErrorCode::CycleTooSmall, "cycle needs N >= 2");
      *out = det_cyclic(n);
    } else {
      throw Error(ErrorCode::InvalidArgument, "unknown topology");
    }
  });
}

hk_status hk_invertible(int d, int n_plus_one, int want_witness, uint64_t budget, hk_decision** out) {
  if (!out) return fail(HK_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    const InvertibilityQuery q{d, n_plus_one};
    auto decision = std::make_unique<hk_decision>();
    decision->invertible = is_invertible(q);
    decision->reason = invertibility_reason(q);
    if (want_witness) {
      if (auto w = find_vanishing_witness(q, budget ? budget : kDefaultWitnessBudget)) {
        decision->witness = std::move(w->ks);
      }
    }
    *out = decision.release();
  });
}

hk_status hk_verify(const char* suite, int max_n, uint64_t seed, hk_report** out) {
  if (!suite || !out) return fail(HK_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    const auto parsed = parse_verify_suite(suite);
    if (!parsed) throw Error(ErrorCode::InvalidArgument, std::string("unknown suite: ") + suite);
    *out = new hk_report{run_verify(*parsed, max_n, seed)};
  });
}

size_t hk_matrix_rows(const hk_matrix* m) {
  return std::visit([](const auto& v) { return v.rows(); }, m->value);
}

size_t hk_matrix_cols(const hk_matrix* m) {
  return std::visit([](const auto& v) { return v.cols(); }, m->value);
}

int hk_matrix_is_exact(const hk_matrix* m) { return std::holds_alternative<ExactMatrix>(m->value); }

size_t hk_matrix_entry_string(const hk_matrix* m, size_t row, size_t col, char* buf, size_t cap) {
  return copy_out(entry_string(*m, row, col), buf, cap);
}

double hk_matrix_entry_double(const hk_matrix* m, size_t row, size_t col) {
  if (const auto* e = std::get_if<ExactMatrix>(&m->value)) return (*e)(row, col).get_d();
  return std::get<FloatMatrix>(m->value)(row, col);
}

void hk_matrix_free(hk_matrix* m) { delete m; }

int hk_decision_invertible(const hk_decision* d) { return d->invertible; }
const char* hk_decision_reason(const hk_decision* d) { return d->reason.c_str(); }
int hk_decision_has_witness(const hk_decision* d) { return d->witness.has_value(); }
size_t hk_decision_witness_size(const hk_decision* d) { return d->witness ? d->witness->size() : 0; }
int hk_decision_witness(const hk_decision* d, size_t i) { return d->witness->at(i); }
void hk_decision_free(hk_decision* d) { delete d; }

size_t hk_report_size(const hk_report* r) { return r->report.checks.size(); }
int hk_report_all_passed(const hk_report* r) { return r->report.all_passed(); }
const char* hk_report_check_id(const hk_report* r, size_t i) { return r->report.checks.at(i).id.c_str(); }
uint64_t hk_report_passed(const hk_report* r, size_t i) { return r->report.checks.at(i).passed; }
uint64_t hk_report_failed(const hk_report* r, size_t i) { return r->report.checks.at(i).failed; }
double hk_report_worst_residual(const hk_report* r, size_t i) { return r->report.checks.at(i).worst_residual; }
double hk_report_tolerance(const hk_report* r, size_t i) { return r->report.checks.at(i).tolerance; }
void hk_report_free(hk_report* r) { delete r; }

}  // extern "C"
