// Copyright 2026 The exsim Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using namespace exsim;
using namespace exsim::cli;

namespace {

RunSpec parse(std::initializer_list<std::string> args) {
  const std::vector<std::string> v(args);
  return parse_args(v);
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("exsim_test_" + name);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::vector<std::string>> read_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::vector<std::string> cells;
    std::istringstream cs(line);
    std::string cell;
    while (std::getline(cs, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

int run_binary(const std::string& args) {
  const std::string cmd = std::string(EXSIM_BINARY) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("parse a sweep") {
  const RunSpec spec = parse({"sweep", "--stats", "boson,fermion", "--phi", "0:6.283185:64", "--out", "results.csv"});
  CHECK(spec.command == Command::Sweep);
  CHECK(spec.stats == std::vector<Statistics>{Statistics::Boson, Statistics::Fermion});
  REQUIRE(spec.phis.size() == 64);
  CHECK(spec.phis.front() == 0.0);
  CHECK(spec.phis[1] == doctest::Approx(6.283185 / 64));
  CHECK(spec.phis.back() < 6.283185);
  CHECK(spec.out == "results.csv");
  CHECK_FALSE(spec.verify);
}

TEST_CASE("parse a single point") {
  const RunSpec spec = parse({"run", "--stats", "fermion", "--phi", "1.0472"});
  CHECK(spec.command == Command::Run);
  CHECK(spec.stats == std::vector<Statistics>{Statistics::Fermion});
  CHECK(spec.phis == std::vector<double>{1.0472});
  CHECK_FALSE(spec.out.has_value());
}

TEST_CASE("parse defaults and lists") {
  const RunSpec verify = parse({"verify"});
  CHECK(verify.verify);
  CHECK(verify.phis.size() == 64);
  CHECK(verify.stats.size() == 3);
  CHECK(verify.tolerance == 1e-12);
  CHECK(parse({"run", "--phi", "0,1.5,-2"}).phis == std::vector<double>{0.0, 1.5, -2.0});
  CHECK(parse({"decompose", "--phi", "0.5"}).command == Command::Decompose);
}

TEST_CASE("usage errors") {
  CHECK_THROWS_AS(parse({"sweep", "--phi", "0:1:0"}), UsageError);
  CHECK_THROWS_AS(parse({"sweep", "--phi", "0:1:x"}), UsageError);
  CHECK_THROWS_AS(parse({"sweep", "--phi", "0:1"}), UsageError);
  CHECK_THROWS_AS(parse({"run", "--phi", "1.0.2"}), UsageError);
  CHECK_THROWS_AS(parse({"run", "--phi", "nan"}), UsageError);
  CHECK_THROWS_AS(parse({"run", "--stats", "anyon"}), UsageError);
  CHECK_THROWS_AS(parse({"run", "--bogus"}), UsageError);
  CHECK_THROWS_AS(parse({"run", "--tol", "0"}), UsageError);
  CHECK_THROWS_AS(parse({"run", "--tol", "abc"}), UsageError);
  CHECK_THROWS_AS(parse({"decompose", "--phi", "0:1:4"}), UsageError);
  CHECK_THROWS_AS(parse({}), UsageError);
  CHECK_THROWS_AS(parse({"run", "--help"}), HelpRequested);
}

TEST_CASE("boson sweep with verification writes 64 rows and passes") {
  const auto out = temp_path("boson_sweep.csv");
  RunSpec spec = parse({"sweep", "--stats", "boson", "--verify", "--out", out.string()});
  std::ostringstream report, err;
  CHECK(execute(spec, report, err) == kExitOk);
  const auto rows = read_csv(slurp(out));
  REQUIRE(rows.size() == 65);
  CHECK(rows[0] == std::vector<std::string>{"stats", "phi", "w_both_v", "w_both_e", "w_one_each",
                                             "p_same_cond", "p_cross_cond", "p_same_closed",
                                             "p_cross_closed", "max_pattern_dev"});
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i][0] == "boson");
  CHECK(report.str().find("max|simulated - closed_form| = ") != std::string::npos);
  CHECK(report.str().find("overall: PASS") != std::string::npos);
  std::filesystem::remove(out);
}

TEST_CASE("single fermion point at phi = pi") {
  RunSpec spec = parse({"run", "--stats", "fermion", "--phi", "3.141592653589793"});
  std::ostringstream csv, err;
  CHECK(execute(spec, csv, err) == kExitOk);
  const auto rows = read_csv(csv.str());
  REQUIRE(rows.size() == 2);
  CHECK(std::stod(rows[1][5]) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::stod(rows[1][7]) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("report shows deviations below 1e-12 across the full sweep") {
  RunSpec spec = parse({"verify", "--labeled"});
  const std::vector<Row> rows = compute_rows(spec);
  CHECK(rows.size() == 3 * 64);
  for (const Row& r : rows) {
    CHECK(std::abs(r.p_same_cond - r.p_same_closed) < 1e-12);
    CHECK(r.max_pattern_dev < 1e-12);
    CHECK(*r.labeled_dev < 1e-12);
  }
}

TEST_CASE("csv output is deterministic") {
  const auto a = temp_path("det_a.csv");
  const auto b = temp_path("det_b.csv");
  std::ostringstream sink;
  RunSpec spec = parse({"sweep", "--raw", "--labeled", "--phi", "0:6.283185307179586:16", "--out", a.string()});
  CHECK(execute(spec, sink, sink) == kExitOk);
  spec.out = b.string();
  CHECK(execute(spec, sink, sink) == kExitOk);
  const std::string text = slurp(a);
  CHECK(text == slurp(b));
  CHECK(text.find(",labeled_dev,p_D1_D1,p_D1_D2,p_D1_D1p") != std::string::npos);
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

TEST_CASE("exit status reflects verification and I/O") {
  std::ostringstream out, err;
  // 1e-300 is below round-off, so some row must fail.
  RunSpec strict = parse({"run", "--verify", "--tol", "1e-300", "--phi", "0.3"});
  CHECK(execute(strict, out, err) == kExitDeviation);
  CHECK(err.str().find("overall: FAIL") != std::string::npos);

  RunSpec unverified = parse({"run", "--tol", "1e-300", "--phi", "0.3"});
  CHECK(execute(unverified, out, err) == kExitOk);

  RunSpec unwritable = parse({"run", "--out", "/nonexistent-dir/x.csv"});
  CHECK(execute(unwritable, out, err) == kExitIo);
}

TEST_CASE("decompose prints the term tables") {
  std::ostringstream out, err;
  CHECK(execute(parse({"decompose", "--phi", "0"}), out, err) == kExitOk);
  const std::string text = out.str();
  CHECK(text.find("symmetric part of the one-each component") != std::string::npos);
  CHECK(text.find("antisymmetric part: detection probabilities") != std::string::npos);
  CHECK(text.find("D1&D1'  0.5") != std::string::npos);
}

TEST_CASE("binary exit codes") {
  CHECK(run_binary("verify") == kExitOk);
  CHECK(run_binary("sweep --phi 0:1:0") == kExitUsage);
  CHECK(run_binary("run --nope") == kExitUsage);
  CHECK(run_binary("run --out /nonexistent-dir/x.csv") == kExitIo);
  CHECK(run_binary("--help") == kExitOk);
}
