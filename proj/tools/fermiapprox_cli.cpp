// Copyright 2026 The fermiapprox Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

// Command-line front end. Deliberately a thin driver over the C API: it
// parses arguments, builds states, and prints the reports produced by the
// library. Diagnostics go to stderr with a nonzero exit code.

#include <cstdio>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "fermiapprox.h"

namespace {

struct StateDeleter {
  void operator()(fa_state* s) const { fa_state_free(s); }
};
struct ReportDeleter {
  void operator()(fa_report* r) const { fa_report_free(r); }
};
using StatePtr = std::unique_ptr<fa_state, StateDeleter>;
using ReportPtr = std::unique_ptr<fa_report, ReportDeleter>;

const char* status_name(fa_status s) {
  switch (s) {
    case FA_OK: return "OK";
    case FA_ERR_ZERO_STATE: return "ZeroState";
    case FA_ERR_SHAPE_MISMATCH: return "ShapeMismatch";
    case FA_ERR_NOT_ORTHONORMAL: return "NotOrthonormal";
    case FA_ERR_NOT_UNITARY: return "NotUnitary";
    case FA_ERR_BAD_SHAPE: return "BadShape";
    case FA_ERR_NOT_NORMALIZED: return "NotNormalized";
    case FA_ERR_NOT_HERMITIAN: return "NotHermitian";
    case FA_ERR_WRONG_SHAPE: return "WrongShape";
    case FA_ERR_BAD_RANK: return "BadRank";
    case FA_ERR_TOO_LARGE: return "TooLarge";
    case FA_ERR_NOT_CERTAIN: return "NotCertain";
    case FA_ERR_NOT_SIMULTANEOUS: return "NotSimultaneous";
    case FA_ERR_NOT_OPTIMAL: return "NotOptimal";
    case FA_ERR_NOT_PAIRED: return "NotPaired";
    case FA_ERR_UNKNOWN_NAME: return "UnknownName";
    case FA_ERR_PARSE: return "ParseError";
    case FA_ERR_IO: return "IoError";
    case FA_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case FA_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

[[noreturn]] void die(fa_status status) {
  std::fprintf(stderr, "error: %s: %s\n", status_name(status),
               fa_last_error());
  std::exit(1);
}

void check(fa_status status) {
  if (status != FA_OK) die(status);
}

StatePtr load_state(const std::string& path, bool normalize) {
  fa_state* raw = nullptr;
  check(fa_state_load(path.c_str(), normalize ? 1 : 0, &raw));
  return StatePtr(raw);
}

void print_report(const ReportPtr& report) {
  std::fputs(fa_report_text(report.get()), stdout);
}

std::string default_out_name(const std::string& name) {
  std::string base = name.substr(0, name.find('('));
  return base + ".fst";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"optimal Slater-determinant approximation toolkit"};
  app.require_subcommand(1);

  fa_config cfg;
  fa_config_init(&cfg);

  std::string path, csv, name, out_path;
  bool normalize = false;
  int rank = 0;
  int particles = 3, orbitals = 6, samples = 100;

  auto add_opt_flags = [&](CLI::App* cmd) {
    cmd->add_option("--restarts", cfg.restarts, "optimizer restarts");
    cmd->add_option("--tol", cfg.tol, "convergence tolerance on the value");
    cmd->add_option("--seed", cfg.seed, "base random seed");
  };

  CLI::App* analyze = app.add_subcommand(
      "analyze", "occupations, envelope rank, Borland-Dennis check, "
                 "certain orbitals, simultaneous pairs");
  analyze->add_option("file", path, "input .fst state file")->required();
  analyze->add_flag("--normalize", normalize, "normalize on load");

  CLI::App* approx = app.add_subcommand(
      "approximate", "best rank-M orbital subspace (default M = N)");
  approx->add_option("file", path, "input .fst state file")->required();
  approx->add_option("--rank", rank, "subspace dimension M (default N)");
  approx->add_flag("--normalize", normalize, "normalize on load");
  add_opt_flags(approx);

  CLI::App* canonical = app.add_subcommand(
      "canonical36", "canonical five-term form of a (3,6) state");
  canonical->add_option("file", path, "input .fst state file")->required();
  canonical->add_flag("--normalize", normalize, "normalize on load");
  add_opt_flags(canonical);

  CLI::App* reduce = app.add_subcommand(
      "reduce", "factor/branch reduction tree with per-leaf values");
  reduce->add_option("file", path, "input .fst state file")->required();
  reduce->add_flag("--normalize", normalize, "normalize on load");
  add_opt_flags(reduce);

  CLI::App* ensemble = app.add_subcommand(
      "ensemble", "distribution of the maximal overlap over random states");
  ensemble->add_option("--N", particles, "particle count")->required();
  ensemble->add_option("--d", orbitals, "orbital count")->required();
  ensemble->add_option("--samples", samples, "number of random states")
      ->required();
  ensemble->add_option("--csv", csv, "write per-sample values to CSV");
  add_opt_flags(ensemble);

  CLI::App* examples = app.add_subcommand(
      "examples", "write a reference state to an .fst file");
  examples->add_option("--name", name,
                       "state name, e.g. eq36, cyclic, ghz(0.8,0.6,3)")
      ->required();
  examples->add_option("--out", out_path, "output path (default <name>.fst)");

  CLI11_PARSE(app, argc, argv);

  fa_report* raw = nullptr;
  if (analyze->parsed()) {
    StatePtr state = load_state(path, normalize);
    check(fa_report_analyze(state.get(), path.c_str(), &raw));
  } else if (approx->parsed()) {
    StatePtr state = load_state(path, normalize);
    check(fa_report_approximate(state.get(), path.c_str(), rank, &cfg, &raw));
  } else if (canonical->parsed()) {
    StatePtr state = load_state(path, normalize);
    check(fa_report_canonical36(state.get(), path.c_str(), &cfg, &raw));
  } else if (reduce->parsed()) {
    StatePtr state = load_state(path, normalize);
    check(fa_report_reduce(state.get(), path.c_str(), &cfg, &raw));
  } else if (ensemble->parsed()) {
    check(fa_report_ensemble(particles, orbitals, samples, &cfg,
                             csv.empty() ? nullptr : csv.c_str(), &raw));
  } else if (examples->parsed()) {
    fa_state* s = nullptr;
    check(fa_state_builtin(name.c_str(), &s));
    StatePtr state(s);
    if (out_path.empty()) out_path = default_out_name(name);
    check(fa_state_save(state.get(), out_path.c_str()));
    check(fa_report_examples(state.get(), name.c_str(), out_path.c_str(),
                             &raw));
  }
  ReportPtr report(raw);
  print_report(report);
  return 0;
}
