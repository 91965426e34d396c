// Copyright 2026 The fermiapprox Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "fermiapprox.h"

#include <cstring>
#include <exception>
#include <string>

#include "builtin.hpp"
#include "ensemble.hpp"
#include "fock.hpp"
#include "fst_io.hpp"
#include "optimize.hpp"
#include "rdm.hpp"
#include "report.hpp"

using fermi::Complex;
using fermi::ErrorCode;
using fermi::FermionState;

struct fa_state {
  FermionState value;
};

struct fa_result {
  fermi::ApproximationResult value;
};

struct fa_report {
  std::string text;
};

namespace {

thread_local std::string t_last_error;

fa_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroState: return FA_ERR_ZERO_STATE;
    case ErrorCode::ShapeMismatch: return FA_ERR_SHAPE_MISMATCH;
    case ErrorCode::NotOrthonormal: return FA_ERR_NOT_ORTHONORMAL;
    case ErrorCode::NotUnitary: return FA_ERR_NOT_UNITARY;
    case ErrorCode::BadShape: return FA_ERR_BAD_SHAPE;
    case ErrorCode::NotNormalized: return FA_ERR_NOT_NORMALIZED;
    case ErrorCode::NotHermitian: return FA_ERR_NOT_HERMITIAN;
    case ErrorCode::WrongShape: return FA_ERR_WRONG_SHAPE;
    case ErrorCode::BadRank: return FA_ERR_BAD_RANK;
    case ErrorCode::TooLarge: return FA_ERR_TOO_LARGE;
    case ErrorCode::NotCertain: return FA_ERR_NOT_CERTAIN;
    case ErrorCode::NotSimultaneous: return FA_ERR_NOT_SIMULTANEOUS;
    case ErrorCode::NotOptimal: return FA_ERR_NOT_OPTIMAL;
    case ErrorCode::NotPaired: return FA_ERR_NOT_PAIRED;
    case ErrorCode::UnknownName: return FA_ERR_UNKNOWN_NAME;
    case ErrorCode::ParseError: return FA_ERR_PARSE;
    case ErrorCode::IoError: return FA_ERR_IO;
  }
  return FA_ERR_INTERNAL;
}

/// Runs a callable, translating exceptions into status codes.
template <typename Fn>
fa_status guarded(Fn&& fn) {
  try {
    fn();
    return FA_OK;
  } catch (const fermi::Error& e) {
    t_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return FA_ERR_INTERNAL;
  } catch (...) {
    t_last_error = "unknown error";
    return FA_ERR_INTERNAL;
  }
}

fa_status invalid(const char* message) {
  t_last_error = message;
  return FA_ERR_INVALID_ARGUMENT;
}

fermi::OptimizerConfig to_config(const fa_config* cfg) {
  if (!cfg) return {};
  fermi::OptimizerConfig out;
  out.restarts = cfg->restarts;
  out.max_iterations = cfg->max_iterations;
  out.tol = cfg->tol;
  out.seed = cfg->seed;
  out.step_init = cfg->step_init;
  out.step_shrink = cfg->step_shrink;
  out.step_min = cfg->step_min;
  return out;
}

fa_status make_report(fa_report** out, std::string text) {
  *out = new fa_report{std::move(text)};
  return FA_OK;
}

}  // namespace

extern "C" {

const char* fa_version(void) { return "1.0.0"; }

const char* fa_last_error(void) { return t_last_error.c_str(); }

void fa_config_init(fa_config* cfg) {
  if (!cfg) return;
  fermi::OptimizerConfig d;
  cfg->restarts = d.restarts;
  cfg->max_iterations = d.max_iterations;
  cfg->tol = d.tol;
  cfg->seed = d.seed;
  cfg->step_init = d.step_init;
  cfg->step_shrink = d.step_shrink;
  cfg->step_min = d.step_min;
}

fa_status fa_state_load(const char* path, int normalize, fa_state** out) {
  if (!path || !out) return invalid("fa_state_load: null argument");
  return guarded([&] {
    *out = new fa_state{fermi::load_fst(path, normalize != 0)};
  });
}

fa_status fa_state_save(const fa_state* state, const char* path) {
  if (!state || !path) return invalid("fa_state_save: null argument");
  return guarded([&] { fermi::save_fst(state->value, path); });
}

fa_status fa_state_from_terms(int particles, int orbitals, size_t n_terms,
                              const int* indices, const double* re,
                              const double* im, int normalize,
                              fa_state** out) {
  if (!out || (n_terms && (!indices || !re)))
    return invalid("fa_state_from_terms: null argument");
  return guarded([&] {
    FermionState state(particles, orbitals);
    for (size_t t = 0; t < n_terms; ++t) {
      Complex amp(re[t], im ? im[t] : 0.0);
      state.add_term(
          std::span<const int>(indices + t * particles, particles), amp);
    }
    if (normalize) state = fermi::normalize(state);
    *out = new fa_state{std::move(state)};
  });
}

fa_status fa_state_builtin(const char* name, fa_state** out) {
  if (!name || !out) return invalid("fa_state_builtin: null argument");
  return guarded([&] { *out = new fa_state{fermi::builtin_state(name)}; });
}

fa_status fa_state_random(int particles, int orbitals, uint64_t seed,
                          fa_state** out) {
  if (!out) return invalid("fa_state_random: null argument");
  return guarded([&] {
    *out = new fa_state{fermi::random_state(particles, orbitals, seed)};
  });
}

fa_status fa_state_normalized(const fa_state* state, fa_state** out) {
  if (!state || !out) return invalid("fa_state_normalized: null argument");
  return guarded([&] { *out = new fa_state{fermi::normalize(state->value)}; });
}

void fa_state_free(fa_state* state) { delete state; }

int fa_state_particles(const fa_state* state) {
  return state ? state->value.particles() : -1;
}

int fa_state_orbitals(const fa_state* state) {
  return state ? state->value.orbitals() : -1;
}

size_t fa_state_term_count(const fa_state* state) {
  return state ? state->value.term_count() : 0;
}

double fa_state_norm(const fa_state* state) {
  return state ? state->value.norm() : 0.0;
}

fa_status fa_state_terms(const fa_state* state, int* indices, double* re,
                         double* im) {
  if (!state || !indices || !re || !im)
    return invalid("fa_state_terms: null argument");
  return guarded([&] {
    const int n = state->value.particles();
    size_t t = 0;
    for (const fermi::OrbitalIndexSet& key : state->value.sorted_keys()) {
      std::vector<int> idx = key.indices();
      for (int i = 0; i < n; ++i) indices[t * n + i] = idx[i];
      Complex amp = state->value.amplitude(key);
      re[t] = amp.real();
      im[t] = amp.imag();
      ++t;
    }
  });
}

fa_status fa_one_particle_rdm(const fa_state* state, double* re, double* im) {
  if (!state || !re || !im) return invalid("fa_one_particle_rdm: null argument");
  return guarded([&] {
    fermi::Matrix rho = fermi::one_particle_rdm(state->value);
    const int d = state->value.orbitals();
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) {
        re[r * d + c] = rho(r, c).real();
        im[r * d + c] = rho(r, c).imag();
      }
  });
}

fa_status fa_occupations(const fa_state* state, double* occ) {
  if (!state || !occ) return invalid("fa_occupations: null argument");
  return guarded([&] {
    fermi::NaturalOrbitalDecomposition dec =
        fermi::natural_orbitals(state->value);
    for (int i = 0; i < dec.occupations.size(); ++i)
      occ[i] = dec.occupations(i);
  });
}

fa_status fa_envelope_rank(const fa_state* state, double tol, int* rank) {
  if (!state || !rank) return invalid("fa_envelope_rank: null argument");
  return guarded([&] { *rank = fermi::envelope_rank(state->value, tol); });
}

fa_status fa_borland_dennis(const fa_state* state, double tol,
                            fa_bd_report* out) {
  if (!state || !out) return invalid("fa_borland_dennis: null argument");
  return guarded([&] {
    fermi::BorlandDennisReport r = fermi::borland_dennis_check(
        fermi::natural_orbitals(state->value), tol);
    out->sum_1_6 = r.sum_1_6;
    out->sum_2_5 = r.sum_2_5;
    out->sum_3_4 = r.sum_3_4;
    out->slack = r.slack;
    out->tol = r.tol;
    out->satisfied = r.satisfied ? 1 : 0;
  });
}

fa_status fa_optimize_slater(const fa_state* state, const fa_config* cfg,
                             fa_result** out) {
  if (!state || !out) return invalid("fa_optimize_slater: null argument");
  return guarded([&] {
    *out = new fa_result{fermi::optimize_slater(state->value, to_config(cfg))};
  });
}

fa_status fa_optimize_subspace(const fa_state* state, int rank,
                               const fa_config* cfg, fa_result** out) {
  if (!state || !out) return invalid("fa_optimize_subspace: null argument");
  return guarded([&] {
    *out = new fa_result{
        fermi::optimize_subspace(state->value, rank, to_config(cfg))};
  });
}

fa_status fa_exact_rank_dminus1(const fa_state* state, fa_result** out) {
  if (!state || !out) return invalid("fa_exact_rank_dminus1: null argument");
  return guarded(
      [&] { *out = new fa_result{fermi::exact_rank_dminus1(state->value)}; });
}

void fa_result_free(fa_result* result) { delete result; }

double fa_result_value(const fa_result* result) {
  return result ? result->value.value : -1.0;
}

int fa_result_iterations(const fa_result* result) {
  return result ? result->value.iterations : -1;
}

int fa_result_restarts(const fa_result* result) {
  return result ? result->value.restarts_used : -1;
}

int fa_result_converged(const fa_result* result) {
  return result && result->value.converged ? 1 : 0;
}

fa_status fa_result_frame_shape(const fa_result* result, int* rows,
                                int* cols) {
  if (!result || !rows || !cols)
    return invalid("fa_result_frame_shape: null argument");
  *rows = static_cast<int>(result->value.frame.rows());
  *cols = static_cast<int>(result->value.frame.cols());
  return FA_OK;
}

fa_status fa_result_frame(const fa_result* result, double* re, double* im) {
  if (!result || !re || !im) return invalid("fa_result_frame: null argument");
  const fermi::Matrix& frame = result->value.frame;
  for (int r = 0; r < frame.rows(); ++r)
    for (int c = 0; c < frame.cols(); ++c) {
      re[r * frame.cols() + c] = frame(r, c).real();
      im[r * frame.cols() + c] = frame(r, c).imag();
    }
  return FA_OK;
}

fa_status fa_report_analyze(const fa_state* state, const char* source,
                            fa_report** out) {
  if (!state || !out) return invalid("fa_report_analyze: null argument");
  return guarded([&] {
    make_report(out, fermi::report_analyze(state->value,
                                           source ? source : "<memory>"));
  });
}

fa_status fa_report_approximate(const fa_state* state, const char* source,
                                int rank, const fa_config* cfg,
                                fa_report** out) {
  if (!state || !out) return invalid("fa_report_approximate: null argument");
  return guarded([&] {
    int m = rank > 0 ? rank : state->value.particles();
    make_report(out,
                fermi::report_approximate(state->value,
                                          source ? source : "<memory>", m,
                                          to_config(cfg)));
  });
}

fa_status fa_report_reduce(const fa_state* state, const char* source,
                           const fa_config* cfg, fa_report** out) {
  if (!state || !out) return invalid("fa_report_reduce: null argument");
  return guarded([&] {
    make_report(out, fermi::report_reduce(state->value,
                                          source ? source : "<memory>",
                                          to_config(cfg)));
  });
}

fa_status fa_report_canonical36(const fa_state* state, const char* source,
                                const fa_config* cfg, fa_report** out) {
  if (!state || !out) return invalid("fa_report_canonical36: null argument");
  return guarded([&] {
    make_report(out, fermi::report_canonical36(state->value,
                                               source ? source : "<memory>",
                                               to_config(cfg)));
  });
}

fa_status fa_report_ensemble(int particles, int orbitals, int samples,
                             const fa_config* cfg, const char* csv_path,
                             fa_report** out) {
  if (!out) return invalid("fa_report_ensemble: null argument");
  return guarded([&] {
    fermi::EnsembleReport report =
        fermi::run_ensemble(particles, orbitals, samples, to_config(cfg));
    std::string csv = csv_path ? csv_path : "";
    if (!csv.empty()) fermi::write_ensemble_csv(report, csv);
    make_report(out, fermi::report_ensemble(report, csv));
  });
}

fa_status fa_report_examples(const fa_state* state, const char* name,
                             const char* out_path, fa_report** out) {
  if (!state || !out) return invalid("fa_report_examples: null argument");
  return guarded([&] {
    make_report(out, fermi::report_examples(state->value,
                                            name ? name : "<memory>",
                                            out_path ? out_path : ""));
  });
}

const char* fa_report_text(const fa_report* report) {
  return report ? report->text.c_str() : "";
}

void fa_report_free(fa_report* report) { delete report; }

}  // extern "C"
