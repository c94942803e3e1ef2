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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "document.hpp"
#include "run_cli.hpp"

using hueckel::cli::MatrixDocument;
using hueckel::cli::parse_matrix_json;
using hueckel::cli::write_matrix_json;

namespace {

std::string reemit(const std::string& json) {
  std::ostringstream os;
  write_matrix_json(os, parse_matrix_json(json));
  return os.str();
}

}  // namespace

TEST_CASE("build emits CSV and JSON") {
  const RunResult csv = run_cli("build --topology open --n 3");
  CHECK(csv.exit_code == 0);
  CHECK(csv.out == "0,1,0\n1,0,1\n0,1,0\n");

  const RunResult json = run_cli("build --topology cyclic --n 6 --format json");
  CHECK(json.exit_code == 0);
  const MatrixDocument doc = parse_matrix_json(json.out);
  CHECK(doc.meta.topology == "cyclic");
  CHECK(doc.meta.n == 6);
  CHECK(doc.meta.exact);
  CHECK(doc.entries[0 * 6 + 5] == "1");
  CHECK(doc.entries[5 * 6 + 0] == "1");

  const RunResult alt = run_cli("build --topology open --n 4 --alpha 3 --beta 1/2");
  CHECK(alt.out == "0,1/2,0,0\n1/2,0,3,0\n0,3,0,1/2\n0,0,1/2,0\n");

  const RunResult lattice = run_cli("build --topology lattice --d 2 --n 2");
  CHECK(lattice.out == "0,1,1,0\n1,0,0,1\n1,0,0,1\n0,1,1,0\n");
}

TEST_CASE("domain errors exit 3 with the error name") {
  const RunResult r = run_cli("build --topology open --n 5 --alpha 2 --beta 1");
  CHECK(r.exit_code == 3);
  CHECK(r.out.empty());
  CHECK(r.err.rfind("AlternatingOddN: ", 0) == 0);
  CHECK(run_cli("green --topology cyclic --n 8 --method usmani").exit_code == 3);
  CHECK(run_cli("green --topology open --n 6 --r 9 --s 1").exit_code == 3);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("build --topology open").exit_code == 2);
  CHECK(run_cli("build --topology hexagon --n 3").exit_code == 2);
  CHECK(run_cli("build --topology open --n 4 --alpha 0.5").exit_code == 2);
  CHECK(run_cli("green --topology open --n 4 --r 1").exit_code == 2);
  CHECK(run_cli("verify --suite nothing").exit_code == 2);
  CHECK(run_cli("build --topology lattice --d 2 --n 2", "HUECKEL_MAX_CELLS=abc ").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("green entries through every method") {
  CHECK(run_cli("green --topology open --n 6 --method closed --r 4 --s 1").out == "1\n");
  CHECK(run_cli("green --topology open --n 6 --method usmani --r 4 --s 1").out == "1\n");
  CHECK(run_cli("green --topology open --n 6 --method numeric --r 4 --s 1").out == "1.0000000000000000\n");
  const RunResult spectral = run_cli("green --topology open --n 6 --method spectral --r 4 --s 1");
  CHECK(spectral.exit_code == 0);
  CHECK(std::stod(spectral.out) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(run_cli("green --topology open --n 2 --alpha 5 --beta 2 --r 2 --s 1 --transmission").out == "1/4\n");
  CHECK(run_cli("green --topology cyclic --n 4 --alpha 2 --beta 1 --r 2 --s 1").out == "1/3\n");
}

TEST_CASE("singular inputs exit 4") {
  const RunResult ring = run_cli("green --topology cyclic --n 8");
  CHECK(ring.exit_code == 4);
  CHECK(ring.err == "singular: N=4k\n");
  const RunResult odd = run_cli("green --topology open --n 5");
  CHECK(odd.exit_code == 4);
  CHECK(odd.err == "singular: N odd\n");
  CHECK(run_cli("green --topology open --n 5 --method numeric").exit_code == 4);
  const RunResult lattice = run_cli("green --topology lattice --d 2 --n 4");
  CHECK(lattice.exit_code == 4);
  CHECK(lattice.err == "singular: even dimension\n");
}

TEST_CASE("lattice Green's function") {
  const RunResult full = run_cli("green --topology lattice --d 3 --n 4 --format json");
  CHECK(full.exit_code == 0);
  const MatrixDocument doc = parse_matrix_json(full.out);
  CHECK(doc.rows == 64);
  CHECK_FALSE(doc.meta.exact);
  CHECK(doc.meta.lattice_dim == 3);
  const RunResult by_coords = run_cli("green --topology lattice --d 3 --n 4 --r 1,1,2 --s 2,1,1");
  const RunResult by_flat = run_cli("green --topology lattice --d 3 --n 4 --r 2 --s 17");
  CHECK(by_coords.exit_code == 0);
  CHECK(std::stod(by_coords.out) == doctest::Approx(std::stod(by_flat.out)).epsilon(1e-12));
  CHECK(std::stod(by_coords.out) == doctest::Approx(std::stod(doc.entries[1 * 64 + 16])).epsilon(1e-10));
  CHECK(run_cli("green --topology lattice --d 3 --n 4 --method usmani").exit_code == 3);
}

TEST_CASE("determinants") {
  CHECK(run_cli("det --topology cyclic --n 7").out == "2\n");
  CHECK(run_cli("det --topology open --n 8").out == "1\n");
  CHECK(run_cli("det --topology open --n 7").out == "0\n");
  CHECK(run_cli("det --topology cyclic --n 6 --format json").out ==
        "{\"kind\":\"scalar\",\"quantity\":\"det\",\"topology\":\"cyclic\",\"n\":6,\"value\":\"-4\",\"exact\":true}\n");
}

TEST_CASE("invertibility decisions") {
  CHECK(run_cli("invertible --d 3 --n-plus-one 25").out ==
        "{\"kind\":\"decision\",\"d\":3,\"n_plus_one\":25,\"invertible\":true,\"reason\":\"3 < 5\"}\n");
  CHECK(run_cli("invertible --d 3 --n-plus-one 9 --witness").out ==
        "{\"kind\":\"decision\",\"d\":3,\"n_plus_one\":9,\"invertible\":false,\"reason\":\"3 >= 3\","
        "\"witness\":[2,4,8]}\n");
  CHECK(run_cli("invertible --d 2 --n-plus-one 11").out ==
        "{\"kind\":\"decision\",\"d\":2,\"n_plus_one\":11,\"invertible\":false,\"reason\":\"even dimension\"}\n");
  CHECK(run_cli("invertible --d 3 --n-plus-one 9 --witness --format csv").out == "false,3 >= 3,2,4,8\n");
  const RunResult budget = run_cli("invertible --d 7 --n-plus-one 45 --witness --budget 10");
  CHECK(budget.exit_code == 5);
  CHECK(budget.err.rfind("BudgetExhausted: ", 0) == 0);
}

TEST_CASE("verify exit codes and formats") {
  const RunResult ok = run_cli("verify --suite trig --max-n 12");
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("trig.sum_cos,1000,0,") != std::string::npos);
  const RunResult json = run_cli("verify --suite open --max-n 8 --format json");
  CHECK(json.exit_code == 0);
  CHECK(json.out.rfind("{\"kind\":\"report\",\"suite\":\"open\",\"max_n\":8,", 0) == 0);
}

TEST_CASE("JSON matrices round-trip") {
  for (const char* args : {"build --topology cyclic --n 6 --format json",
                           "green --topology open --n 8 --alpha 2/3 --beta -5 --format json",
                           "green --topology cyclic --n 7 --method numeric --format json",
                           "green --topology lattice --d 1 --n 4 --format json",
                           "build --topology lattice --d 3 --n 2 --format json"}) {
    const RunResult r = run_cli(args);
    REQUIRE(r.exit_code == 0);
    CHECK(reemit(r.out) == r.out);
  }
}

TEST_CASE("identical flags give identical bytes") {
  for (const char* args : {"verify --suite alternating --max-n 12 --seed 42",
                           "green --topology open --n 10 --method spectral --format json",
                           "invertible --d 5 --n-plus-one 27 --witness"}) {
    CHECK(run_cli(args).out == run_cli(args).out);
  }
}

TEST_CASE("memory guard and CSV limit") {
  const RunResult guarded = run_cli("build --topology lattice --d 3 --n 4", "HUECKEL_MAX_CELLS=1000 ");
  CHECK(guarded.exit_code == 3);
  CHECK(guarded.err.rfind("TooLarge: ", 0) == 0);
  CHECK(run_cli("build --topology lattice --d 3 --n 4", "HUECKEL_MAX_CELLS=4096 ").exit_code == 0);
  // 1331^2 entries: above the default guard, and above the CSV limit once allowed.
  CHECK(run_cli("build --topology lattice --d 3 --n 11 --format json").exit_code == 3);
  const RunResult csv = run_cli("build --topology lattice --d 3 --n 11", "HUECKEL_MAX_CELLS=2000000 ");
  CHECK(csv.exit_code == 2);
  CHECK(csv.out.empty());
  const RunResult json = run_cli("build --topology lattice --d 3 --n 11 --format json", "HUECKEL_MAX_CELLS=2000000 ");
  CHECK(json.exit_code == 0);
  const MatrixDocument doc = parse_matrix_json(json.out);
  CHECK(doc.rows == 1331);
  CHECK(doc.cols == 1331);
}
