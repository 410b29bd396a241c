#include <doctest.h>

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "dfskit/json_io.hpp"
#include "dfskit/logical_gates.hpp"
#include "dfskit/noise_sim.hpp"

using namespace dfskit;
using nlohmann::json;

namespace {

// Path to the built CLI, injected by CMake.
#ifndef DFSKIT_CLI_PATH
#define DFSKIT_CLI_PATH "dfskit"
#endif

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string tmp = "cli_out.tmp";
  const std::string cmd =
      std::string(DFSKIT_CLI_PATH) + " " + args + " > " + tmp + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  RunResult res;
  res.exit_code = WEXITSTATUS(status);
  std::ifstream in(tmp);
  std::stringstream ss;
  ss << in.rdbuf();
  res.output = ss.str();
  std::remove(tmp.c_str());
  return res;
}

}  // namespace

TEST_SUITE_BEGIN("json_cli");

TEST_CASE("double formatting round-trips") {
  for (double v : {0.0, 1.0 / 3.0, -2.0 / std::sqrt(6.0), 1e-17, 12345.678}) {
    CHECK(std::stod(format_double(v)) == v);
  }
}

TEST_CASE("basis json carries the documented schema") {
  const GellMannBasis b = generate_basis(3);
  const json j = json::parse(basis_json(b));
  CHECK(j["d"] == 3);
  CHECK(j["matrices"].size() == 8);
  CHECK(j["matrices"][0].size() == 9);  // row-major [re,im] pairs
  CHECK(j["diagonal_indices"] == json({3, 8}));
  // lambda_8 entry (2,2) = -2/sqrt(3)
  CHECK(j["matrices"][7][8][0].get<double>() ==
        doctest::Approx(-2.0 / std::sqrt(3.0)));
}

TEST_CASE("tensor json lists canonical triples only") {
  const StructureTensors t = structure_constants(generate_basis(3));
  const json j = json::parse(tensors_json(t));
  CHECK(j["d"] == 3);
  for (const auto& row : j["f"]) {
    REQUIRE(row.size() == 4);
    CHECK(row[0].get<int>() < row[1].get<int>());
    CHECK(row[1].get<int>() < row[2].get<int>());
  }
  // f entries start with [1,2,3,1]
  CHECK(j["f"][0] == json({1, 2, 3, 1.0}));
}

TEST_CASE("json export is deterministic") {
  const GellMannBasis b = generate_basis(4);
  CHECK(basis_json(b) == basis_json(generate_basis(4)));
  const StructureTensors t = structure_constants(b);
  CHECK(tensors_json(t) == tensors_json(structure_constants(b)));
}

TEST_CASE("cli: basis writes matrices and tensors") {
  const RunResult r = run_cli("basis --d 4");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.output);
  CHECK(j["basis"]["matrices"].size() == 15);
  // dsym(15,15,15) = -2/sqrt(6) appears in the tensor block
  bool found = false;
  for (const auto& row : j["tensors"]["dsym"])
    if (row[0] == 15 && row[1] == 15 && row[2] == 15) {
      found = true;
      CHECK(row[3].get<double>() == doctest::Approx(-2.0 / std::sqrt(6.0)));
    }
  CHECK(found);
}

TEST_CASE("cli: usage errors exit with 2") {
  CHECK(run_cli("basis --d 1").exit_code == 2);
  CHECK(run_cli("bogus-subcommand").exit_code == 2);
  CHECK(run_cli("gate --kind not-a-gate").exit_code == 2);
}

TEST_CASE("cli: verify passes for supported dimensions") {
  CHECK(run_cli("verify --d 3 --n 3").exit_code == 0);
  CHECK(run_cli("verify --d 2 --n 3").exit_code == 0);
  CHECK(run_cli("verify --d 3 --n 4").exit_code == 0);
}

TEST_CASE("cli: search reports the six-dimensional commutant") {
  const RunResult r = run_cli("search --d 3");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.output);
  CHECK(j["nullspace_dim"] == 6);
  for (const auto& res : j["residuals"]) CHECK(res.get<double>() < 1e-9);

  const RunResult rv = run_cli("search --d 5 --mode verify");
  REQUIRE(rv.exit_code == 0);
  const json jv = json::parse(rv.output);
  CHECK(jv["mode"] == "verify");
  CHECK(jv["pass"] == true);
}

TEST_CASE("cli: gate output") {
  const RunResult rx = run_cli("gate --kind xbar --t 0");
  REQUIRE(rx.exit_code == 0);
  const json jx = json::parse(rx.output);
  for (int i = 0; i < 27; ++i)
    for (int k = 0; k < 27; ++k) {
      const auto& pair = jx["unitary"]["entries"][i * 27 + k];
      CHECK(pair[0].get<double>() ==
            doctest::Approx(i == k ? 1.0 : 0.0).epsilon(1e-12));
      CHECK(pair[1].get<double>() == doctest::Approx(0.0).epsilon(1e-12));
    }

  const RunResult rs = run_cli("gate --kind swap --d 3");
  REQUIRE(rs.exit_code == 0);
  const json js = json::parse(rs.output);
  // |01> -> -i e^{i pi/6} |10>: row 3, column 1
  const auto& entry = js["unitary"]["entries"][3 * 9 + 1];
  CHECK(entry[0].get<double>() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(entry[1].get<double>() ==
        doctest::Approx(-std::sqrt(3.0) / 2.0).epsilon(1e-12));
}

TEST_CASE("cli: simulate emits clean jsonl and reruns byte-identically") {
  const std::string args = "simulate --steps 25 --seed 12 --a 0.6,0 --b 0,0.8";
  const RunResult a = run_cli(args);
  REQUIRE(a.exit_code == 0);
  const RunResult b = run_cli(args);
  CHECK(a.output == b.output);

  std::stringstream lines(a.output);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    const json j = json::parse(line);
    CHECK(j["step"] == count);
    CHECK(std::abs(j["leak"].get<double>()) < 1e-10);
    CHECK(j["p0"].get<double>() == doctest::Approx(0.36).epsilon(1e-9));
    ++count;
  }
  CHECK(count == 26);
}

TEST_CASE("cli: rerunning any export is byte-identical") {
  CHECK(run_cli("basis --d 3").output == run_cli("basis --d 3").output);
  CHECK(run_cli("gate --kind swap --d 4").output ==
        run_cli("gate --kind swap --d 4").output);
}

TEST_CASE("cli: DFSKIT_TOL is honored and the flag wins") {
  setenv("DFSKIT_TOL", "1e-30", 1);
  CHECK(run_cli("verify --d 3 --n 3").exit_code == 1);
  CHECK(run_cli("verify --d 3 --n 3 --tol 1e-10").exit_code == 0);
  unsetenv("DFSKIT_TOL");
}

TEST_SUITE_END();
