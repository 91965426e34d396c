// Copyright 2026 The fermiapprox Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include "fermiapprox.h"

namespace {

namespace fs = std::filesystem;

std::string temp_path(const std::string& name) {
  static int counter = 0;
  fs::path dir = fs::temp_directory_path() /
                 ("fermiapprox_capi_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return (dir / (std::to_string(counter++) + "_" + name)).string();
}

}  // namespace

TEST_CASE("c api: build a state from terms and inspect it") {
  const int indices[] = {1, 2, 3, 4, 5, 6};
  const double re[] = {1.0, 1.0};
  const double im[] = {0.0, 0.0};
  fa_state* state = nullptr;
  REQUIRE(fa_state_from_terms(3, 6, 2, indices, re, im, 1, &state) == FA_OK);
  CHECK(fa_state_particles(state) == 3);
  CHECK(fa_state_orbitals(state) == 6);
  CHECK(fa_state_term_count(state) == 2);
  CHECK(std::abs(fa_state_norm(state) - 1.0) < 1e-12);

  std::vector<int> out_idx(2 * 3);
  std::vector<double> out_re(2), out_im(2);
  REQUIRE(fa_state_terms(state, out_idx.data(), out_re.data(),
                         out_im.data()) == FA_OK);
  CHECK(out_idx[0] == 1);
  CHECK(out_idx[5] == 6);
  CHECK(out_re[0] == doctest::Approx(1.0 / std::sqrt(2.0)));
  fa_state_free(state);
}

TEST_CASE("c api: occupations, rdm, and Borland-Dennis") {
  fa_state* state = nullptr;
  REQUIRE(fa_state_builtin("eq36", &state) == FA_OK);

  std::vector<double> occ(6);
  REQUIRE(fa_occupations(state, occ.data()) == FA_OK);
  for (int i = 0; i < 3; ++i) CHECK(occ[i] == doctest::Approx(2.0 / 3.0));
  for (int i = 3; i < 6; ++i) CHECK(occ[i] == doctest::Approx(1.0 / 3.0));

  std::vector<double> re(36), im(36);
  REQUIRE(fa_one_particle_rdm(state, re.data(), im.data()) == FA_OK);
  double trace = 0.0;
  for (int i = 0; i < 6; ++i) trace += re[i * 6 + i];
  CHECK(trace == doctest::Approx(3.0));

  int rank = 0;
  REQUIRE(fa_envelope_rank(state, 1e-10, &rank) == FA_OK);
  CHECK(rank == 6);

  fa_bd_report bd;
  REQUIRE(fa_borland_dennis(state, 1e-8, &bd) == FA_OK);
  CHECK(bd.satisfied == 1);
  CHECK(bd.sum_1_6 == doctest::Approx(1.0));
  CHECK(bd.slack == doctest::Approx(1.0 / 3.0));
  fa_state_free(state);
}

TEST_CASE("c api: optimization results and frames") {
  fa_state* state = nullptr;
  REQUIRE(fa_state_builtin("ghz", &state) == FA_OK);

  fa_config cfg;
  fa_config_init(&cfg);
  CHECK(cfg.restarts == 32);
  cfg.restarts = 16;

  fa_result* result = nullptr;
  REQUIRE(fa_optimize_slater(state, &cfg, &result) == FA_OK);
  CHECK(fa_result_value(result) == doctest::Approx(2.0 / 3.0).epsilon(1e-8));
  CHECK(fa_result_converged(result) == 1);
  CHECK(fa_result_restarts(result) == 16);

  int rows = 0, cols = 0;
  REQUIRE(fa_result_frame_shape(result, &rows, &cols) == FA_OK);
  CHECK(rows == 6);
  CHECK(cols == 3);
  std::vector<double> re(rows * cols), im(rows * cols);
  REQUIRE(fa_result_frame(result, re.data(), im.data()) == FA_OK);
  // Optimal frame is supported on the first three orbitals.
  for (int r = 3; r < 6; ++r)
    for (int c = 0; c < 3; ++c) {
      CHECK(std::abs(re[r * cols + c]) < 1e-6);
      CHECK(std::abs(im[r * cols + c]) < 1e-6);
    }
  fa_result_free(result);

  fa_result* sub = nullptr;
  REQUIRE(fa_optimize_subspace(state, 5, &cfg, &sub) == FA_OK);
  CHECK(fa_result_value(sub) == doctest::Approx(2.0 / 3.0).epsilon(1e-8));
  fa_result_free(sub);

  fa_result* drop = nullptr;
  REQUIRE(fa_exact_rank_dminus1(state, &drop) == FA_OK);
  CHECK(fa_result_value(drop) == doctest::Approx(2.0 / 3.0).epsilon(1e-8));
  fa_result_free(drop);

  REQUIRE(fa_optimize_subspace(state, 2, &cfg, &sub) == FA_ERR_BAD_RANK);
  fa_state_free(state);
}

TEST_CASE("c api: save, load, and random states") {
  fa_state* state = nullptr;
  REQUIRE(fa_state_random(3, 6, 99, &state) == FA_OK);
  std::string path = temp_path("random.fst");
  REQUIRE(fa_state_save(state, path.c_str()) == FA_OK);

  fa_state* loaded = nullptr;
  REQUIRE(fa_state_load(path.c_str(), 0, &loaded) == FA_OK);
  CHECK(fa_state_term_count(loaded) == fa_state_term_count(state));
  CHECK(std::abs(fa_state_norm(loaded) - 1.0) < 1e-12);
  fa_state_free(loaded);
  fa_state_free(state);
  fs::remove(path);
}

TEST_CASE("c api: error statuses and messages") {
  fa_state* state = nullptr;
  CHECK(fa_state_load("/nonexistent/missing.fst", 0, &state) == FA_ERR_IO);
  CHECK(std::string(fa_last_error()).find("missing.fst") !=
        std::string::npos);

  CHECK(fa_state_builtin("nosuch", &state) == FA_ERR_UNKNOWN_NAME);
  CHECK(fa_state_random(4, 2, 0, &state) == FA_ERR_BAD_SHAPE);
  CHECK(fa_state_load(nullptr, 0, &state) == FA_ERR_INVALID_ARGUMENT);

  const int dup[] = {1, 1};
  const double re[] = {1.0};
  CHECK(fa_state_from_terms(2, 4, 1, dup, re, nullptr, 0, &state) ==
        FA_ERR_BAD_SHAPE);
}

TEST_CASE("c api: report handles") {
  fa_state* state = nullptr;
  REQUIRE(fa_state_builtin("eq36", &state) == FA_OK);

  fa_report* report = nullptr;
  REQUIRE(fa_report_analyze(state, "eq36", &report) == FA_OK);
  std::string text = fa_report_text(report);
  CHECK(text.find("report: analyze") == 0);
  CHECK(text.find("occupations:") != std::string::npos);
  fa_report_free(report);

  fa_config cfg;
  fa_config_init(&cfg);
  cfg.restarts = 12;
  REQUIRE(fa_report_approximate(state, "eq36", 0, &cfg, &report) == FA_OK);
  text = fa_report_text(report);
  CHECK(text.find("value: 0.444444444") != std::string::npos);
  fa_report_free(report);

  REQUIRE(fa_report_ensemble(3, 6, 6, &cfg, nullptr, &report) == FA_OK);
  text = fa_report_text(report);
  CHECK(text.find("report: ensemble") == 0);
  CHECK(text.find("violations: 0") != std::string::npos);
  fa_report_free(report);

  fa_state_free(state);
}
