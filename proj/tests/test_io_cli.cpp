// Copyright 2026 The fermiapprox Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "builtin.hpp"
#include "fock.hpp"
#include "fst_io.hpp"
#include "oracle.hpp"
#include "report.hpp"
#include "rng.hpp"

using namespace fermi;

namespace {

namespace fs = std::filesystem;

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("fermiapprox_test_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static int& counter() {
    static int c = 0;
    return c;
  }
  std::string file(const std::string& name) const {
    return (path / name).string();
  }
};

struct CommandResult {
  int exit_code;
  std::string output;  // stdout and stderr combined
};

CommandResult run_cli(const std::string& args) {
  std::string command = std::string(FERMI_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  char buf[4096];
  while (size_t got = fread(buf, 1, sizeof buf, pipe)) output.append(buf, got);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, output};
}

std::string report_field(const std::string& report, const std::string& key) {
  std::istringstream in(report);
  std::string line;
  std::string prefix = key + ": ";
  while (std::getline(in, line))
    if (line.rfind(prefix, 0) == 0) return line.substr(prefix.size());
  return "";
}

}  // namespace

TEST_CASE("fst files round-trip exactly") {
  TempDir dir;
  FermionState psi = random_state(3, 6, 2024);
  std::string path = dir.file("state.fst");
  save_fst(psi, path);
  FermionState loaded = load_fst(path, false);
  CHECK(loaded.particles() == 3);
  CHECK(loaded.orbitals() == 6);
  CHECK(testutil::state_distance(psi, loaded) == 0.0);
}

TEST_CASE("fst parser handles comments, unsorted tuples, and errors") {
  {
    std::istringstream in(
        "# header comment\n"
        "6 3\n"
        "\n"
        "2 1 3 0.5 0  # unsorted, picks up a minus sign\n"
        "4 5 6 0.5 0\n");
    FermionState s = parse_fst(in, "<test>", false);
    CHECK(s.amplitude(OrbitalIndexSet::from_sorted(std::vector<int>{1, 2, 3}))
              .real() == doctest::Approx(-0.5));
  }
  {
    std::istringstream in("6 3\n1 2 x 0.5 0\n");
    CHECK_THROWS_AS(parse_fst(in, "<test>", false), Error);
    std::istringstream in2("6 3\n1 2 x 0.5 0\n");
    try {
      parse_fst(in2, "<test>", false);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ParseError);
      CHECK(std::string(e.what()).find("<test>:2") != std::string::npos);
    }
  }
  {
    // Duplicate index set (after canonicalization).
    std::istringstream in("6 3\n1 2 3 0.5 0\n3 2 1 0.1 0\n");
    CHECK_THROWS_AS(parse_fst(in, "<test>", false), Error);
  }
  {
    std::istringstream in("6 3\n1 2 7 0.5 0\n");
    CHECK_THROWS_AS(parse_fst(in, "<test>", false), Error);
  }
  {
    std::istringstream in("* nonsense\n");
    CHECK_THROWS_AS(parse_fst(in, "<test>", false), Error);
  }
  {
    // normalize-on-load
    std::istringstream in("6 3\n1 2 3 3 0\n4 5 6 4 0\n");
    FermionState s = parse_fst(in, "<test>", true);
    CHECK(s.is_normalized());
    CHECK(s.amplitude(OrbitalIndexSet::from_sorted(std::vector<int>{1, 2, 3}))
              .real() == doctest::Approx(0.6));
  }
}

TEST_CASE("analyze report carries occupations and pair data") {
  FermionState eq36 = builtin_state("eq36");
  std::string report = report_analyze(eq36, "eq36");
  CHECK(report_field(report, "report") == "analyze");
  CHECK(report_field(report, "orbitals") == "6");
  CHECK(report_field(report, "particles") == "3");
  std::string occ = report_field(report, "occupations");
  CHECK(occ.find("0.666666666666667") != std::string::npos);
  CHECK(occ.find("0.333333333333333") != std::string::npos);
  CHECK(report_field(report, "envelope_rank") == "6");
  CHECK(report_field(report, "bd_satisfied") == "true");
  CHECK(report_field(report, "bd_sum_1_6") == "1");
}

TEST_CASE("cli end-to-end: examples then approximate") {
  TempDir dir;
  std::string fst = dir.file("eq36.fst");
  CommandResult ex = run_cli("examples --name eq36 --out " + fst);
  CHECK(ex.exit_code == 0);
  CHECK(report_field(ex.output, "out") == fst);

  CommandResult approx =
      run_cli("approximate " + fst + " --restarts 16 --seed 3");
  CHECK(approx.exit_code == 0);
  double value = std::stod(report_field(approx.output, "value"));
  CHECK(value == doctest::Approx(4.0 / 9.0).epsilon(1e-8));

  CommandResult rank5 =
      run_cli("approximate " + fst + " --rank 5 --restarts 16");
  CHECK(rank5.exit_code == 0);
  double value5 = std::stod(report_field(rank5.output, "value"));
  CHECK(value5 == doctest::Approx(2.0 / 3.0).epsilon(1e-8));
}

TEST_CASE("cli end-to-end: ghz approximate with reduction tree") {
  TempDir dir;
  std::string fst = dir.file("ghz.fst");
  CommandResult ex = run_cli("examples --name ghz --out " + fst);
  CHECK(ex.exit_code == 0);

  CommandResult approx = run_cli("approximate " + fst + " --restarts 16");
  CHECK(approx.exit_code == 0);
  CHECK(report_field(approx.output, "reduction_applied") == "true");
  double value = std::stod(report_field(approx.output, "value"));
  CHECK(value == doctest::Approx(2.0 / 3.0).epsilon(1e-8));
}

TEST_CASE("cli end-to-end: analyze a determinant") {
  TempDir dir;
  std::string fst = dir.file("det.fst");
  {
    std::ofstream out(fst);
    out << "6 3\n1 2 3 1 0\n";
  }
  CommandResult res = run_cli("analyze " + fst);
  CHECK(res.exit_code == 0);
  CHECK(report_field(res.output, "envelope_rank") == "3");
  CHECK(report_field(res.output, "bd_satisfied") == "true");
  CHECK(report_field(res.output, "certain_count") == "3");
}

TEST_CASE("cli end-to-end: reduce prints a three-leaf tree") {
  TempDir dir;
  std::string fst = dir.file("ex3.fst");
  CommandResult ex = run_cli("examples --name example3 --out " + fst);
  CHECK(ex.exit_code == 0);

  CommandResult res = run_cli("reduce " + fst + " --restarts 8");
  CHECK(res.exit_code == 0);
  CHECK(report_field(res.output, "tree.leaves") == "3");
  double imax = std::stod(report_field(res.output, "tree.imax"));
  CHECK(imax == doctest::Approx(0.64).epsilon(1e-8));
  CHECK(res.output.find("kind=branch") != std::string::npos);
  CHECK(res.output.find("kind=leaf") != std::string::npos);
}

TEST_CASE("cli end-to-end: canonical36 of the degenerate three-term state") {
  TempDir dir;
  std::string fst = dir.file("eq36.fst");
  run_cli("examples --name eq36 --out " + fst);
  CommandResult res = run_cli("canonical36 " + fst + " --restarts 16");
  CHECK(res.exit_code == 0);
  double value = std::stod(report_field(res.output, "value"));
  CHECK(value == doctest::Approx(4.0 / 9.0).epsilon(1e-8));
  double a = std::stod(report_field(res.output, "coeff.A").substr(1));
  CHECK(a * a == doctest::Approx(4.0 / 9.0).epsilon(1e-6));
  double err = std::stod(report_field(res.output, "reconstruction_error"));
  CHECK(err < 1e-9);
  CHECK(report_field(res.output, "block1.trace") == "1");
}

TEST_CASE("cli end-to-end: ensemble csv is byte-identical across runs") {
  TempDir dir;
  std::string csv1 = dir.file("a.csv");
  std::string csv2 = dir.file("b.csv");
  std::string args = "ensemble --N 3 --d 6 --samples 20 --seed 5 --restarts 8";
  CommandResult r1 = run_cli(args + " --csv " + csv1);
  CommandResult r2 = run_cli(args + " --csv " + csv2);
  CHECK(r1.exit_code == 0);
  CHECK(r2.exit_code == 0);
  std::ifstream f1(csv1), f2(csv2);
  std::stringstream s1, s2;
  s1 << f1.rdbuf();
  s2 << f2.rdbuf();
  CHECK(s1.str() == s2.str());
  CHECK(s1.str().rfind("sample_index,seed,value\n", 0) == 0);
  double min = std::stod(report_field(r1.output, "min"));
  CHECK(min >= 4.0 / 9.0 - 1e-6);
}

TEST_CASE("cli reports errors with nonzero exit codes") {
  TempDir dir;
  CommandResult missing = run_cli("analyze " + dir.file("absent.fst"));
  CHECK(missing.exit_code != 0);
  CHECK(missing.output.find("IoError") != std::string::npos);

  std::string bad = dir.file("bad.fst");
  {
    std::ofstream out(bad);
    out << "6 3\n1 2 x 0.5 0\n";
  }
  CommandResult parse = run_cli("analyze " + bad);
  CHECK(parse.exit_code != 0);
  CHECK(parse.output.find("ParseError") != std::string::npos);
  CHECK(parse.output.find(":2") != std::string::npos);

  CommandResult unknown = run_cli("examples --name nosuch");
  CHECK(unknown.exit_code != 0);
  CHECK(unknown.output.find("UnknownName") != std::string::npos);

  std::string ghz = dir.file("ghz.fst");
  run_cli("examples --name ghz --out " + ghz);
  CommandResult badrank = run_cli("approximate " + ghz + " --rank 9");
  CHECK(badrank.exit_code != 0);
  CHECK(badrank.output.find("BadRank") != std::string::npos);
}
